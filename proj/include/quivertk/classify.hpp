#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivertk/quiver.hpp"

namespace quivertk {

  enum class WitnessKind {
    special_loop,           // arrows = {loop}
    non_monomial,           // relation = index of a linear combination / idempotent
    relation_length,        // relation = index of a zero relation of length != 2
    out_degree,             // vertices = {v}, arrows = the arrows leaving v
    in_degree,              // vertices = {v}, arrows = the arrows entering v
    successors_in_ideal,    // arrows = {a, b1, b2}: b1a and b2a both relations
    successors_outside,     // arrows = {a, b1, b2}: b1a and b2a both non-relations
    predecessors_in_ideal,  // arrows = {b, a1, a2}: ba1 and ba2 both relations
    predecessors_outside,   // arrows = {b, a1, a2}: ba1 and ba2 both non-relations
    special_boundary,       // relation = zero relation starting or ending at a special loop
    special_square,         // relation = zero relation containing e*e for a special loop e
    missing_idempotent,     // arrows = {loop}
    infinite_cycle,         // arrows = a cyclic word avoiding every zero relation
    unsupported             // finite dimensionality could not be decided
  };

  std::string to_string(WitnessKind k);

  struct Witness {
    std::string            clause;  // "SB1", "C3", "gentle-continuation", ...
    WitnessKind            kind;
    std::string            message;
    std::vector<VertexId>  vertices;
    std::vector<ArrowId>   arrows;
    std::optional<std::size_t> relation;
    // Arrow ids refer to the split presentation of the input.
    bool on_split_presentation = false;
  };

  struct Verdict {
    bool                 holds = true;
    std::vector<Witness> witnesses;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  struct ClassificationReport {
    Verdict gentle_pair;
    Verdict special_biserial;
    Verdict skewed_gentle;
    Verdict clannish;
    Verdict finite_dimensional;
  };

  Verdict is_gentle_pair(Presentation const& p);
  Verdict is_special_biserial(Presentation const& p);
  Verdict is_skewed_gentle(Presentation const& p);
  Verdict is_clannish(Presentation const& p);

  // Presentations with special loops are decided on their split presentation;
  // throws UnsupportedError when splitting is impossible.  Linear combinations
  // are ignored, so a "finite" answer is always sound.
  Verdict is_finite_dimensional(Presentation const& p);

  ClassificationReport classify(Presentation const& p);

  // Re-checks a witness against p; true iff the claimed violation is present.
  bool replay_witness(Presentation const& p, Witness const& w);

  // Monomial finite-dimensionality test on a quiver with the given zero paths.
  // Returns an arrow cycle whose powers avoid every zero path, if one exists.
  std::optional<std::vector<ArrowId>> find_infinite_cycle(Quiver const&            q,
                                                          std::vector<Path> const& zero_paths);

}  // namespace quivertk
