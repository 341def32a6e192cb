#pragma once

/**
 * q-deformed Markov triples and numbers via Vieta mutation.
 *
 * A q-Markov triple (a, b, c) satisfies
 *
 *   a^2 + b^2 + c^2 = (q + 1 + q^-1) abc + (q - 1)(q^-1 - 1)
 *
 * and mutation replaces c with (q + 1 + q^-1) ab - c.  The numbers are
 * indexed by Farey labels t in [0,1]: descending the Stern-Brocot path keeps
 * the three regions around the current tree edge and applies one mutation per
 * step.
 */

#include <vector>

#include "qmarkov/farey.hpp"
#include "qmarkov/laurent.hpp"

namespace qmarkov {

struct QMarkovTriple {
  LaurentPoly a;
  LaurentPoly b;
  LaurentPoly c;

  friend bool operator==(const QMarkovTriple&, const QMarkovTriple&) = default;
};

/// (a, b, c) -> (a, b, (q+1+q^-1) ab - c).  An involution.
QMarkovTriple mutate(const QMarkovTriple& t);

/// LHS minus RHS of the q-Markov equation; zero iff the equation holds.
LaurentPoly equation_residual(const QMarkovTriple& t);
bool verify_equation(const QMarkovTriple& t);

/// Regions meeting at the tree vertex directly beneath the region of t:
/// a = left parent, b = right parent, c = m_q^t.  For 1/1 this is the root
/// vertex (1, 1, 2_q) with the 1/0 region standing in for the left parent.
/// Throws Error(UnsupportedLabel) for t = 0/1, which has no vertex below it.
QMarkovTriple vertex_triple(const FareyRational& t);

/// m_q^t.  0/1 -> 1 and 1/1 -> q + q^-1 without descending the tree.
LaurentPoly q_markov_number(const FareyRational& t);

/// Classical Markov number by the integer mutation c' = 3ab - c along the
/// same descent; used as the q = 1 reference.
BigInt classical_markov_number(const FareyRational& t);

/// Inverts m_q^t -> t from the degree d and the coefficient alpha of q^{d-1}:
/// t = (d - alpha)/(alpha + 1).  Throws Error(MalformedInput) unless m is
/// monic, palindromic and maps into [0,1].
FareyRational recover_label(const LaurentPoly& m);

}  // namespace qmarkov
