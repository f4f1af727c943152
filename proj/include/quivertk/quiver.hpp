#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "quivertk/field.hpp"

namespace quivertk {

  using VertexId = std::size_t;
  using ArrowId  = std::size_t;

  struct Arrow {
    std::string name;
    VertexId    tail    = 0;
    VertexId    head    = 0;
    bool        special = false;

    friend bool operator==(Arrow const&, Arrow const&) = default;
  };

  // A finite quiver whose loops may be marked special.  Vertices and arrows
  // are addressed by their declaration index.
  class Quiver {
   public:
    VertexId add_vertex(std::string name);
    ArrowId  add_arrow(std::string name, VertexId tail, VertexId head, bool special = false);

    std::size_t num_vertices() const noexcept {
      return _vertices.size();
    }
    std::size_t num_arrows() const noexcept {
      return _arrows.size();
    }

    std::string const& vertex_name(VertexId v) const {
      return _vertices.at(v);
    }
    Arrow const& arrow(ArrowId a) const {
      return _arrows.at(a);
    }
    std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }
    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArrowId>  find_arrow(std::string_view name) const;
    VertexId                vertex_id(std::string_view name) const;
    ArrowId                 arrow_id(std::string_view name) const;

    std::vector<ArrowId> arrows_out(VertexId v) const;
    std::vector<ArrowId> arrows_in(VertexId v) const;

    std::vector<ArrowId>   special_loops() const;
    std::optional<ArrowId> special_loop_at(VertexId v) const;
    bool                   is_special_vertex(VertexId v) const {
      return special_loop_at(v).has_value();
    }
    bool has_special_loops() const;

    // Connectedness of the underlying undirected graph (the empty quiver and a
    // single vertex count as connected).
    bool is_connected() const;

    friend bool operator==(Quiver const& x, Quiver const& y) {
      return x._vertices == y._vertices && x._arrows == y._arrows;
    }

   private:
    std::vector<std::string>                  _vertices;
    std::vector<Arrow>                        _arrows;
    std::unordered_map<std::string, VertexId> _vertex_index;
    std::unordered_map<std::string, ArrowId>  _arrow_index;
  };

  // A nonempty path stored first-applied-first.
  class Path {
   public:
    Path(Quiver const& q, std::vector<ArrowId> arrows);

    std::vector<ArrowId> const& arrows() const noexcept {
      return _arrows;
    }
    std::size_t length() const noexcept {
      return _arrows.size();
    }
    VertexId source() const noexcept {
      return _source;
    }
    VertexId target() const noexcept {
      return _target;
    }

    friend bool operator==(Path const&, Path const&)  = default;
    friend auto operator<=>(Path const&, Path const&) = default;

   private:
    std::vector<ArrowId> _arrows;
    VertexId             _source = 0;
    VertexId             _target = 0;
  };

  // "q then p"; rendered as the word pq.  Requires target(q) == source(p).
  Path compose(Quiver const& quiver, Path const& p, Path const& q);

  // Right-to-left rendering, e.g. "c*b*f*a".
  std::string to_string(Quiver const& quiver, Path const& p);

  struct ZeroPath {
    Path path;
    friend bool operator==(ZeroPath const&, ZeroPath const&) = default;
  };

  struct Term {
    Rational coefficient;
    Path     path;
    friend bool operator==(Term const&, Term const&) = default;
  };

  struct LinearCombination {
    std::vector<Term> terms;
    friend bool operator==(LinearCombination const&, LinearCombination const&) = default;
  };

  // e^2 - e for a special loop e.
  struct IdempotentLoop {
    ArrowId loop;
    friend bool operator==(IdempotentLoop const&, IdempotentLoop const&) = default;
  };

  using Relation = std::variant<ZeroPath, LinearCombination, IdempotentLoop>;

  // Every arrow mentioned by the relation (with repetition, in order).
  std::vector<ArrowId> relation_arrows(Relation const& r);
  // The DSL line ("zero b*a", "rel b*a + -1 d*c", "idem f").
  std::string to_string(Quiver const& quiver, Relation const& r);
  // The element itself ("b*a", "b*a + -1 d*c", "f*f - f").
  std::string relation_expression(Quiver const& quiver, Relation const& r);

  enum class Provenance { user, split_admissible, envelope };
  std::string to_string(Provenance p);

  // A quiver with a relation set.  Construction validates every invariant and
  // throws ValidationError on the first violation.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(Quiver quiver, std::vector<Relation> relations, Provenance provenance = Provenance::user);

    Quiver const& quiver() const noexcept {
      return _quiver;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    Provenance provenance() const noexcept {
      return _provenance;
    }

    // Non-fatal findings, currently only disconnectedness.
    std::vector<std::string> warnings() const;

    // Zero relations only; linear combinations and idempotents are skipped.
    std::vector<Path> zero_paths() const;
    bool              is_monomial() const;

    // Equality of quiver and relation list; provenance is ignored.
    friend bool operator==(Presentation const& x, Presentation const& y) {
      return x._quiver == y._quiver && x._relations == y._relations;
    }

   private:
    Quiver                _quiver;
    std::vector<Relation> _relations;
    Provenance            _provenance = Provenance::user;
  };

  // Integer vectors keyed by vertex declaration order.
  template <typename Tag, typename T>
  struct VertexVector {
    std::vector<T> values;

    VertexVector() = default;
    explicit VertexVector(std::vector<T> v) : values(std::move(v)) {}
    VertexVector(std::initializer_list<T> v) : values(v) {}

    std::size_t size() const noexcept {
      return values.size();
    }
    T& operator[](std::size_t i) {
      return values[i];
    }
    T const& operator[](std::size_t i) const {
      return values[i];
    }

    friend bool operator==(VertexVector const&, VertexVector const&)  = default;
    friend auto operator<=>(VertexVector const&, VertexVector const&) = default;
  };

  struct DimensionTag;
  struct WeightTag;
  using DimensionVector = VertexVector<DimensionTag, std::size_t>;
  using Weight          = VertexVector<WeightTag, long long>;

  std::size_t total_dimension(DimensionVector const& d);
  // dim GL(d) = sum of squares.
  std::size_t gl_dimension(DimensionVector const& d);
  std::string to_string(DimensionVector const& d);
  std::string to_string(Weight const& w);

  // Comma-separated values in vertex declaration order.
  DimensionVector parse_dimension_vector(Quiver const& q, std::string const& text);
  Weight          parse_weight(Quiver const& q, std::string const& text);

}  // namespace quivertk
