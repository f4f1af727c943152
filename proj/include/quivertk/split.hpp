#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quivertk/quiver.hpp"
#include "quivertk/representation.hpp"

namespace quivertk {

  enum class Sign { none, plus, minus };

  // "", "+" or "-"
  char const* sign_suffix(Sign s);

  struct SplitVertexOrigin {
    VertexId original;
    Sign     sign;
  };

  struct SplitArrowOrigin {
    ArrowId original;
    Sign    tail_sign;
    Sign    head_sign;
  };

  // How the vertices and arrows of a standard presentation map to those of
  // its admissible presentation.  Special loops have no image.
  struct SplitMap {
    std::vector<std::vector<VertexId>> vertex_map;
    std::vector<std::vector<ArrowId>>  arrow_map;
    std::vector<SplitVertexOrigin>     vertex_origin;
    std::vector<SplitArrowOrigin>      arrow_origin;
  };

  struct SplitResult {
    std::shared_ptr<Presentation const> presentation;
    SplitMap                            map;
  };

  // Standard -> admissible presentation.  Each special vertex w becomes w+ and
  // w-; an arrow with special tail gets a sign prefix, one with special head a
  // sign suffix (so "+a-" runs from (ta)+ to (ha)-).  A zero relation becomes,
  // for every choice of signs at special endpoints, the sum over the signs at
  // special interior vertices it passes straight through; a vertex where it
  // traverses the special loop contributes only the + sign.
  //
  // Throws UnsupportedError unless p is clannish.
  SplitResult split_presentation(Presentation const& p);

  // Same construction, checking only that the relation shapes can be
  // transported (zero relations whose special loops are interior and never
  // squared).  Used for finite-dimensionality on non-clannish inputs.
  SplitResult split_relation_shapes(Presentation const& p);

  // Moves a representation of the standard presentation to the admissible
  // one by diagonalizing every special-loop idempotent.
  Representation split_rep(Representation const& m, SplitResult const& split);

  // Two-column "original  image" listing.
  std::string split_map_table(Presentation const& original, SplitResult const& split);

  // A skewed-gentle presentation kQ/J with J generated by the idempotent
  // relations and a subset of the length-two zero relations of p.  Length-two
  // relations are kept in declaration order whenever the remaining choices can
  // still complete to a skewed-gentle presentation.  Throws UnsupportedError if
  // p is not clannish, Error if no subset works.
  Presentation skewed_gentle_envelope(Presentation const& p);

}  // namespace quivertk
