#pragma once

#include <memory>
#include <vector>

#include "quivertk/quiver.hpp"
#include "quivertk/representation.hpp"

namespace quivertk {

  // One class of arrows linked through shared relations, with the smallest
  // subquiver containing them.  Vertex and arrow ids of `presentation` index
  // into `vertices` and `arrows` (both sorted).
  struct Block {
    std::shared_ptr<Presentation const> presentation;
    std::vector<ArrowId>                arrows;
    std::vector<VertexId>               vertices;
    std::vector<std::size_t>            relations;
  };

  struct BlockDecomposition {
    std::vector<Block>       blocks;  // ordered by smallest arrow
    std::vector<std::size_t> arrow_to_block;
    std::vector<VertexId>    isolated_vertices;
  };

  BlockDecomposition rho_blocks(Presentation const& p);

  DimensionVector project_dimension(DimensionVector const&    d,
                                    std::size_t               block,
                                    BlockDecomposition const& dec);

  Representation project_rep(Representation const&     m,
                             std::size_t               block,
                             BlockDecomposition const& dec);

  // Inverse of projecting to every block.  `d` supplies the dimensions at
  // isolated vertices and must agree with the parts elsewhere; the field is
  // explicit since there may be no blocks at all.
  Representation reassemble(std::shared_ptr<Presentation const> p,
                            BlockDecomposition const&           dec,
                            Field const&                        field,
                            DimensionVector const&              d,
                            std::vector<Representation> const&  parts);

}  // namespace quivertk
