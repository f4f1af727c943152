#include "quivertk/rho_blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quivertk/errors.hpp"

namespace quivertk {

  namespace {

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };

    Path relabel(Quiver const& q, Path const& p, std::map<ArrowId, ArrowId> const& arrows) {
      std::vector<ArrowId> out;
      for (ArrowId a : p.arrows()) {
        out.push_back(arrows.at(a));
      }
      return Path(q, std::move(out));
    }

  }  // namespace

  BlockDecomposition rho_blocks(Presentation const& p) {
    Quiver const& q = p.quiver();
    UnionFind     uf(q.num_arrows());
    for (auto const& r : p.relations()) {
      auto arrows = relation_arrows(r);
      for (ArrowId a : arrows) {
        uf.unite(arrows.front(), a);
      }
    }

    BlockDecomposition          dec;
    std::map<std::size_t, std::size_t> root_to_block;
    dec.arrow_to_block.resize(q.num_arrows());
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto [it, fresh] = root_to_block.emplace(uf.find(a), dec.blocks.size());
      if (fresh) {
        dec.blocks.emplace_back();
      }
      dec.arrow_to_block[a] = it->second;
      dec.blocks[it->second].arrows.push_back(a);
    }
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto arrows = relation_arrows(p.relations()[i]);
      dec.blocks[dec.arrow_to_block[arrows.front()]].relations.push_back(i);
    }

    std::vector<bool> touched(q.num_vertices(), false);
    for (auto& b : dec.blocks) {
      std::vector<bool> in(q.num_vertices(), false);
      for (ArrowId a : b.arrows) {
        in[q.arrow(a).tail] = in[q.arrow(a).head] = true;
      }
      for (VertexId v = 0; v < q.num_vertices(); ++v) {
        if (in[v]) {
          b.vertices.push_back(v);
          touched[v] = true;
        }
      }

      Quiver                       sub;
      std::map<VertexId, VertexId> vmap;
      std::map<ArrowId, ArrowId>   amap;
      for (VertexId v : b.vertices) {
        vmap[v] = sub.add_vertex(q.vertex_name(v));
      }
      for (ArrowId a : b.arrows) {
        auto const& x = q.arrow(a);
        amap[a]       = sub.add_arrow(x.name, vmap.at(x.tail), vmap.at(x.head), x.special);
      }
      std::vector<Relation> rels;
      for (std::size_t i : b.relations) {
        auto const& r = p.relations()[i];
        if (auto const* z = std::get_if<ZeroPath>(&r)) {
          rels.emplace_back(ZeroPath{relabel(sub, z->path, amap)});
        } else if (auto const* lc = std::get_if<LinearCombination>(&r)) {
          LinearCombination out;
          for (auto const& t : lc->terms) {
            out.terms.push_back({t.coefficient, relabel(sub, t.path, amap)});
          }
          rels.emplace_back(std::move(out));
        } else {
          rels.emplace_back(IdempotentLoop{amap.at(std::get<IdempotentLoop>(r).loop)});
        }
      }
      b.presentation = std::make_shared<Presentation const>(std::move(sub), std::move(rels),
                                                            p.provenance());
    }
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      if (!touched[v]) {
        dec.isolated_vertices.push_back(v);
      }
    }
    return dec;
  }

  DimensionVector project_dimension(DimensionVector const&    d,
                                    std::size_t               block,
                                    BlockDecomposition const& dec) {
    if (block >= dec.blocks.size()) {
      throw ValidationError("block index " + std::to_string(block) + " out of range");
    }
    DimensionVector out;
    for (VertexId v : dec.blocks[block].vertices) {
      out.values.push_back(d.values.at(v));
    }
    return out;
  }

  Representation project_rep(Representation const&     m,
                             std::size_t               block,
                             BlockDecomposition const& dec) {
    auto                d = project_dimension(m.dimension(), block, dec);
    std::vector<Matrix> ms;
    for (ArrowId a : dec.blocks[block].arrows) {
      ms.push_back(m.matrix(a));
    }
    return Representation(dec.blocks[block].presentation, m.field(), std::move(d), std::move(ms));
  }

  Representation reassemble(std::shared_ptr<Presentation const> p,
                            BlockDecomposition const&           dec,
                            Field const&                        field,
                            DimensionVector const&              d,
                            std::vector<Representation> const&  parts) {
    if (parts.size() != dec.blocks.size()) {
      throw ValidationError("expected one representation per block");
    }
    std::vector<Matrix> ms(p->quiver().num_arrows());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto const& b = dec.blocks[k];
      if (!(parts[k].field() == field)) {
        throw ValidationError("block representations over different fields");
      }
      for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        if (parts[k].dimension()[i] != d.values.at(b.vertices[i])) {
          throw ValidationError("block " + std::to_string(k)
                                + " disagrees with the dimension vector at vertex "
                                + p->quiver().vertex_name(b.vertices[i]));
        }
      }
      for (std::size_t i = 0; i < b.arrows.size(); ++i) {
        ms[b.arrows[i]] = parts[k].matrix(i);
      }
    }
    return Representation(std::move(p), field, d, std::move(ms));
  }

}  // namespace quivertk
