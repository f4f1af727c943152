#include "quivertk/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "quivertk/errors.hpp"

namespace quivertk {

  namespace {
    void validate_identifier(std::string const& name, char const* what) {
      bool has_alnum = false;
      for (char c : name) {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) {
          has_alnum = true;
        } else if (c != '_' && c != '+' && c != '-' && c != '\'' && c != '.') {
          throw ValidationError(std::string("invalid character '") + c + "' in " + what + " id '"
                                + name + "'");
        }
      }
      if (!has_alnum) {
        throw ValidationError(std::string(what) + " id '" + name
                              + "' must contain a letter or digit");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Quiver
  ////////////////////////////////////////////////////////////////////////

  VertexId Quiver::add_vertex(std::string name) {
    validate_identifier(name, "vertex");
    if (_vertex_index.count(name) != 0) {
      throw ValidationError("duplicate vertex id '" + name + "'");
    }
    VertexId v = _vertices.size();
    _vertex_index.emplace(name, v);
    _vertices.push_back(std::move(name));
    return v;
  }

  ArrowId Quiver::add_arrow(std::string name, VertexId tail, VertexId head, bool special) {
    validate_identifier(name, "arrow");
    if (_arrow_index.count(name) != 0) {
      throw ValidationError("duplicate arrow id '" + name + "'");
    }
    if (tail >= _vertices.size() || head >= _vertices.size()) {
      throw ValidationError("arrow '" + name + "' has an undeclared endpoint");
    }
    if (special && tail != head) {
      throw ValidationError("special arrow '" + name + "' is not a loop");
    }
    if (special && special_loop_at(tail)) {
      throw ValidationError("vertex '" + _vertices[tail] + "' already carries a special loop");
    }
    ArrowId a = _arrows.size();
    _arrow_index.emplace(name, a);
    _arrows.push_back(Arrow{std::move(name), tail, head, special});
    return a;
  }

  std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
    auto it = _vertex_index.find(std::string(name));
    if (it == _vertex_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
    auto it = _arrow_index.find(std::string(name));
    if (it == _arrow_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  VertexId Quiver::vertex_id(std::string_view name) const {
    if (auto v = find_vertex(name)) {
      return *v;
    }
    throw ValidationError("unknown vertex '" + std::string(name) + "'");
  }

  ArrowId Quiver::arrow_id(std::string_view name) const {
    if (auto a = find_arrow(name)) {
      return *a;
    }
    throw ValidationError("unknown arrow '" + std::string(name) + "'");
  }

  std::vector<ArrowId> Quiver::arrows_out(VertexId v) const {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < _arrows.size(); ++a) {
      if (_arrows[a].tail == v) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<ArrowId> Quiver::arrows_in(VertexId v) const {
    std::vector<ArrowId> in;
    for (ArrowId a = 0; a < _arrows.size(); ++a) {
      if (_arrows[a].head == v) {
        in.push_back(a);
      }
    }
    return in;
  }

  std::vector<ArrowId> Quiver::special_loops() const {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < _arrows.size(); ++a) {
      if (_arrows[a].special) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<ArrowId> Quiver::special_loop_at(VertexId v) const {
    for (ArrowId a = 0; a < _arrows.size(); ++a) {
      if (_arrows[a].special && _arrows[a].tail == v) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool Quiver::has_special_loops() const {
    return std::any_of(
        _arrows.begin(), _arrows.end(), [](Arrow const& a) { return a.special; });
  }

  bool Quiver::is_connected() const {
    if (_vertices.size() <= 1) {
      return true;
    }
    std::vector<VertexId> parent(_vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](VertexId x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& a : _arrows) {
      parent[find(a.tail)] = find(a.head);
    }
    VertexId root = find(0);
    for (VertexId v = 1; v < _vertices.size(); ++v) {
      if (find(v) != root) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path::Path(Quiver const& q, std::vector<ArrowId> arrows) : _arrows(std::move(arrows)) {
    if (_arrows.empty()) {
      throw ValidationError("paths must contain at least one arrow");
    }
    for (ArrowId a : _arrows) {
      if (a >= q.num_arrows()) {
        throw ValidationError("path mentions an undeclared arrow");
      }
    }
    for (std::size_t i = 0; i + 1 < _arrows.size(); ++i) {
      if (q.arrow(_arrows[i]).head != q.arrow(_arrows[i + 1]).tail) {
        throw ValidationError("arrows '" + q.arrow(_arrows[i + 1]).name + "' and '"
                              + q.arrow(_arrows[i]).name + "' do not compose: head of '"
                              + q.arrow(_arrows[i]).name + "' is not the tail of '"
                              + q.arrow(_arrows[i + 1]).name + "'");
      }
    }
    _source = q.arrow(_arrows.front()).tail;
    _target = q.arrow(_arrows.back()).head;
  }

  Path compose(Quiver const& quiver, Path const& p, Path const& q) {
    if (q.target() != p.source()) {
      throw ValidationError("cannot compose " + to_string(quiver, p) + " after "
                            + to_string(quiver, q) + ": endpoints differ");
    }
    std::vector<ArrowId> arrows = q.arrows();
    arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
    return Path(quiver, std::move(arrows));
  }

  std::string to_string(Quiver const& quiver, Path const& p) {
    std::string out;
    for (auto it = p.arrows().rbegin(); it != p.arrows().rend(); ++it) {
      if (!out.empty()) {
        out += '*';
      }
      out += quiver.arrow(*it).name;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<ArrowId> relation_arrows(Relation const& r) {
    std::vector<ArrowId> out;
    if (auto const* z = std::get_if<ZeroPath>(&r)) {
      out = z->path.arrows();
    } else if (auto const* lc = std::get_if<LinearCombination>(&r)) {
      for (auto const& t : lc->terms) {
        out.insert(out.end(), t.path.arrows().begin(), t.path.arrows().end());
      }
    } else {
      out.push_back(std::get<IdempotentLoop>(r).loop);
    }
    return out;
  }

  std::string to_string(Quiver const& quiver, Relation const& r) {
    if (auto const* z = std::get_if<ZeroPath>(&r)) {
      return "zero " + to_string(quiver, z->path);
    }
    if (auto const* lc = std::get_if<LinearCombination>(&r)) {
      std::string out = "rel";
      bool        first = true;
      for (auto const& t : lc->terms) {
        if (!first) {
          out += " +";
        }
        first = false;
        if (t.coefficient != 1) {
          out += " " + to_string(t.coefficient);
        }
        out += " " + to_string(quiver, t.path);
      }
      return out;
    }
    return "idem " + quiver.arrow(std::get<IdempotentLoop>(r).loop).name;
  }

  std::string relation_expression(Quiver const& quiver, Relation const& r) {
    if (auto const* e = std::get_if<IdempotentLoop>(&r)) {
      auto const& name = quiver.arrow(e->loop).name;
      return name + "*" + name + " - " + name;
    }
    auto text = to_string(quiver, r);
    return text.substr(text.find(' ') + 1);
  }

  std::string to_string(Provenance p) {
    switch (p) {
      case Provenance::user:
        return "user";
      case Provenance::split_admissible:
        return "split-admissible";
      case Provenance::envelope:
        return "envelope";
    }
    return "user";
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(Quiver quiver, std::vector<Relation> relations, Provenance provenance)
      : _quiver(std::move(quiver)), _relations(std::move(relations)), _provenance(provenance) {
    std::vector<int> idempotent_count(_quiver.num_arrows(), 0);
    for (auto const& r : _relations) {
      for (ArrowId a : relation_arrows(r)) {
        if (a >= _quiver.num_arrows()) {
          throw ValidationError("relation mentions an undeclared arrow");
        }
      }
      if (auto const* z = std::get_if<ZeroPath>(&r)) {
        if (z->path.length() < 2) {
          throw ValidationError("zero relation '" + to_string(_quiver, z->path)
                                + "' has length < 2");
        }
      } else if (auto const* lc = std::get_if<LinearCombination>(&r)) {
        if (lc->terms.empty()) {
          throw ValidationError("empty linear combination");
        }
        std::set<Path> seen;
        for (auto const& t : lc->terms) {
          if (t.coefficient == 0) {
            throw ValidationError("zero coefficient in '" + to_string(_quiver, r) + "'");
          }
          if (t.path.length() < 2) {
            throw ValidationError("path '" + to_string(_quiver, t.path)
                                  + "' in a linear combination has length < 2");
          }
          if (t.path.source() != lc->terms.front().path.source()
              || t.path.target() != lc->terms.front().path.target()) {
            throw ValidationError("non-parallel linear combination '" + to_string(_quiver, r)
                                  + "'");
          }
          if (!seen.insert(t.path).second) {
            throw ValidationError("repeated path in '" + to_string(_quiver, r) + "'");
          }
        }
      } else {
        ArrowId e = std::get<IdempotentLoop>(r).loop;
        if (!_quiver.arrow(e).special) {
          throw ValidationError("idempotent relation on non-special arrow '"
                                + _quiver.arrow(e).name + "'");
        }
        ++idempotent_count[e];
      }
    }
    for (ArrowId e : _quiver.special_loops()) {
      if (idempotent_count[e] != 1) {
        throw ValidationError("special loop '" + _quiver.arrow(e).name + "' must carry exactly one "
                              "idempotent relation, found "
                              + std::to_string(idempotent_count[e]));
      }
    }
  }

  std::vector<std::string> Presentation::warnings() const {
    std::vector<std::string> out;
    if (!_quiver.is_connected()) {
      out.emplace_back("quiver is not connected");
    }
    return out;
  }

  std::vector<Path> Presentation::zero_paths() const {
    std::vector<Path> out;
    for (auto const& r : _relations) {
      if (auto const* z = std::get_if<ZeroPath>(&r)) {
        out.push_back(z->path);
      }
    }
    return out;
  }

  bool Presentation::is_monomial() const {
    return std::all_of(_relations.begin(), _relations.end(), [](Relation const& r) {
      return std::holds_alternative<ZeroPath>(r);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Dimension vectors and weights
  ////////////////////////////////////////////////////////////////////////

  std::size_t total_dimension(DimensionVector const& d) {
    return std::accumulate(d.values.begin(), d.values.end(), std::size_t(0));
  }

  std::size_t gl_dimension(DimensionVector const& d) {
    std::size_t s = 0;
    for (auto x : d.values) {
      s += x * x;
    }
    return s;
  }

  namespace {
    template <typename V>
    std::string join(V const& v) {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
      }
      os << ')';
      return os.str();
    }

    std::vector<std::string> split_commas(std::string const& text) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : text) {
        if (c == ',') {
          out.push_back(cur);
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') {
          cur += c;
        }
      }
      out.push_back(cur);
      if (out.size() == 1 && out[0].empty()) {
        out.clear();
      }
      return out;
    }

    long long parse_integer(std::string const& s) {
      std::size_t pos = 0;
      long long   v   = 0;
      try {
        v = std::stoll(s, &pos);
      } catch (std::exception const&) {
        throw ValidationError("'" + s + "' is not an integer");
      }
      if (pos != s.size()) {
        throw ValidationError("'" + s + "' is not an integer");
      }
      return v;
    }
  }  // namespace

  std::string to_string(DimensionVector const& d) {
    return join(d.values);
  }
  std::string to_string(Weight const& w) {
    return join(w.values);
  }

  DimensionVector parse_dimension_vector(Quiver const& q, std::string const& text) {
    auto parts = split_commas(text);
    if (parts.size() != q.num_vertices()) {
      throw ValidationError("dimension vector has " + std::to_string(parts.size())
                            + " entries, quiver has " + std::to_string(q.num_vertices())
                            + " vertices");
    }
    DimensionVector d;
    for (auto const& p : parts) {
      long long v = parse_integer(p);
      if (v < 0) {
        throw ValidationError("dimension vector entries must be nonnegative");
      }
      d.values.push_back(static_cast<std::size_t>(v));
    }
    return d;
  }

  Weight parse_weight(Quiver const& q, std::string const& text) {
    auto parts = split_commas(text);
    if (parts.size() != q.num_vertices()) {
      throw ValidationError("weight has " + std::to_string(parts.size())
                            + " entries, quiver has " + std::to_string(q.num_vertices())
                            + " vertices");
    }
    Weight w;
    for (auto const& p : parts) {
      w.values.push_back(parse_integer(p));
    }
    return w;
  }

}  // namespace quivertk
