#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quivertk/representation.hpp"

namespace quivertk {

  // dim Hom(M, N), from the intertwiner equations phi(ha) M(a) = N(a) phi(ta).
  std::size_t hom_dim(Representation const& m, Representation const& n);

  std::size_t end_dim(Representation const& m);

  // dim GL(d) - dim End(M).  Throws ValidationError if M violates a relation.
  std::size_t orbit_dim(Representation const& m);

  // Kernel dimension of the Jacobian of all relation equations at M.
  std::size_t tangent_dim(Representation const& m);

  // diag(I_r, 0) of size n.
  Matrix standard_idempotent(std::size_t n, std::size_t r);

  struct IdempotentComponent {
    std::size_t rank;
    std::size_t dimension;
  };

  // The component GL_n . A_r of E_n containing m.  Throws ValidationError if m
  // is not a square idempotent.
  IdempotentComponent idempotent_component(Field const& f, Matrix const& m);

  // Point of the one-vertex presentation with a single special loop.
  Representation idempotent_point(Field const& f, Matrix const& m);

  // One bound per arrow, indexed by arrow id.
  using RankSequence = std::vector<std::size_t>;

  // r_a <= min(d(ta), d(ha)), and r_a + r_b <= d(v) for each relation ba
  // through v (2 r_a <= d(v) when a = b).  Requires a gentle pair.
  bool rank_sequence_feasible(Presentation const& p, DimensionVector const& d, RankSequence const& r);

  // Maximal feasible sequences, in lexicographic order.  Throws
  // UnsupportedError if p is not a gentle pair.
  std::vector<RankSequence> maximal_rank_sequences(Presentation const& p, DimensionVector const& d);

  // A point of rep(I, d) with rank M(a) = r_a exactly, built from random
  // matrices drawn with the given seed; nullopt if r is infeasible.
  std::optional<Representation> attain_rank_sequence(std::shared_ptr<Presentation const> p,
                                                     Field const&                        f,
                                                     DimensionVector const&              d,
                                                     RankSequence const&                 r,
                                                     std::uint64_t                       seed);

  // orbit_dim(M) + k for a generic point M and k one-parameter families.
  std::size_t component_dim(Representation const& m, std::size_t band_families);

}  // namespace quivertk
