#include "quivertk/split.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quivertk/classify.hpp"
#include "quivertk/errors.hpp"

namespace quivertk {

  char const* sign_suffix(Sign s) {
    switch (s) {
      case Sign::plus:
        return "+";
      case Sign::minus:
        return "-";
      default:
        return "";
    }
  }

  namespace {

    std::vector<Sign> signs_at(Quiver const& q, VertexId v) {
      if (q.is_special_vertex(v)) {
        return {Sign::plus, Sign::minus};
      }
      return {Sign::none};
    }

    // Throws UnsupportedError if some relation cannot be transported.
    void check_shapes(Presentation const& p) {
      Quiver const& q = p.quiver();
      for (auto const& r : p.relations()) {
        if (std::holds_alternative<LinearCombination>(r)) {
          throw UnsupportedError("cannot split a presentation with the linear relation "
                                 + relation_expression(q, r));
        }
        auto const* z = std::get_if<ZeroPath>(&r);
        if (z == nullptr) {
          continue;
        }
        auto const& a = z->path.arrows();
        if (q.arrow(a.front()).special || q.arrow(a.back()).special) {
          throw UnsupportedError("cannot split: relation " + to_string(q, z->path)
                                 + " begins or ends with a special loop");
        }
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
          if (a[i] == a[i + 1] && q.arrow(a[i]).special) {
            throw UnsupportedError("cannot split: relation " + to_string(q, z->path)
                                   + " contains a special square");
          }
        }
      }
    }

    class Splitter {
     public:
      explicit Splitter(Presentation const& p) : _p(p), _q(p.quiver()) {}

      SplitResult run() {
        build_quiver();
        std::vector<Relation> rels;
        for (auto const& r : _p.relations()) {
          if (auto const* z = std::get_if<ZeroPath>(&r)) {
            transport(z->path, rels);
          }
        }
        SplitResult out;
        out.presentation = std::make_shared<Presentation const>(std::move(_split), std::move(rels),
                                                                Provenance::split_admissible);
        out.map = std::move(_map);
        return out;
      }

     private:
      void build_quiver() {
        _map.vertex_map.resize(_q.num_vertices());
        _map.arrow_map.resize(_q.num_arrows());
        for (VertexId v = 0; v < _q.num_vertices(); ++v) {
          for (Sign s : signs_at(_q, v)) {
            VertexId w = _split.add_vertex(_q.vertex_name(v) + sign_suffix(s));
            _map.vertex_map[v].push_back(w);
            _map.vertex_origin.push_back({v, s});
          }
        }
        for (ArrowId a = 0; a < _q.num_arrows(); ++a) {
          auto const& arrow = _q.arrow(a);
          if (arrow.special) {
            continue;
          }
          for (Sign ts : signs_at(_q, arrow.tail)) {
            for (Sign hs : signs_at(_q, arrow.head)) {
              ArrowId b = _split.add_arrow(sign_suffix(ts) + arrow.name + sign_suffix(hs),
                                           vertex_image(arrow.tail, ts),
                                           vertex_image(arrow.head, hs));
              _map.arrow_map[a].push_back(b);
              _map.arrow_origin.push_back({a, ts, hs});
            }
          }
        }
      }

      VertexId vertex_image(VertexId v, Sign s) const {
        auto const& img = _map.vertex_map[v];
        return s == Sign::minus ? img[1] : img[0];
      }

      ArrowId arrow_image(ArrowId a, Sign ts, Sign hs) const {
        for (ArrowId b : _map.arrow_map[a]) {
          auto const& o = _map.arrow_origin[b];
          if (o.tail_sign == ts && o.head_sign == hs) {
            return b;
          }
        }
        throw Error("internal: missing split arrow");
      }

      void transport(Path const& path, std::vector<Relation>& out) {
        std::vector<ArrowId> ordinary;
        // traversed[i]: a special loop sits between ordinary[i] and ordinary[i+1]
        std::vector<bool> traversed;
        for (ArrowId a : path.arrows()) {
          if (_q.arrow(a).special) {
            traversed.back() = true;
          } else {
            ordinary.push_back(a);
            traversed.push_back(false);
          }
        }
        std::size_t const m = ordinary.size();

        // Sign choices per junction vertex, then at the two ends.
        std::vector<std::vector<Sign>> junction(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
          VertexId v = _q.arrow(ordinary[i]).head;
          if (!_q.is_special_vertex(v)) {
            junction[i] = {Sign::none};
          } else if (traversed[i]) {
            junction[i] = {Sign::plus};
          } else {
            junction[i] = {Sign::plus, Sign::minus};
          }
        }

        for (Sign start : signs_at(_q, _q.arrow(ordinary.front()).tail)) {
          for (Sign end : signs_at(_q, _q.arrow(ordinary.back()).head)) {
            std::vector<Term>   terms;
            std::vector<std::size_t> choice(m - 1, 0);
            while (true) {
              std::vector<ArrowId> word;
              for (std::size_t i = 0; i < m; ++i) {
                Sign ts = i == 0 ? start : junction[i - 1][choice[i - 1]];
                Sign hs = i + 1 == m ? end : junction[i][choice[i]];
                word.push_back(arrow_image(ordinary[i], ts, hs));
              }
              terms.push_back({Rational(1), Path(_split, std::move(word))});
              // Odometer, first junction outermost.
              std::size_t k = m - 1;
              while (k > 0 && choice[k - 1] + 1 == junction[k - 1].size()) {
                choice[k - 1] = 0;
                --k;
              }
              if (k == 0) {
                break;
              }
              ++choice[k - 1];
            }
            if (terms.size() == 1) {
              out.emplace_back(ZeroPath{std::move(terms.front().path)});
            } else {
              out.emplace_back(LinearCombination{std::move(terms)});
            }
          }
        }
      }

      Presentation const& _p;
      Quiver const&       _q;
      Quiver              _split;
      SplitMap            _map;
    };

    std::string first_witness(Verdict const& v) {
      return v.witnesses.empty() ? std::string("unknown clause")
                                 : v.witnesses.front().clause + ": "
                                       + v.witnesses.front().message;
    }

  }  // namespace

  SplitResult split_relation_shapes(Presentation const& p) {
    check_shapes(p);
    return Splitter(p).run();
  }

  SplitResult split_presentation(Presentation const& p) {
    auto verdict = is_clannish(p);
    if (!verdict) {
      throw UnsupportedError("presentation is not clannish (" + first_witness(verdict) + ")");
    }
    return split_relation_shapes(p);
  }

  Representation split_rep(Representation const& m, SplitResult const& split) {
    require_valid(m);
    Quiver const& q  = m.quiver();
    Field const&  f  = m.field();
    auto const&   sp = *split.presentation;
    if (split.map.vertex_map.size() != q.num_vertices()
        || split.map.arrow_map.size() != q.num_arrows()) {
      throw ValidationError("split map does not belong to the representation's presentation");
    }

    std::vector<Matrix>      basis(q.num_vertices()), inverse(q.num_vertices());
    std::vector<std::size_t> plus_dim(q.num_vertices());
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      std::size_t n = m.dimension()[v];
      if (auto e = q.special_loop_at(v)) {
        Matrix const& idem = m.matrix(*e);
        Matrix        img  = linalg::column_space(f, idem);
        Matrix        ker  = linalg::nullspace(f, idem);
        plus_dim[v]        = img.cols();
        basis[v]           = linalg::hconcat(img, ker);
        if (basis[v].cols() != n) {
          throw Error("internal: idempotent basis has wrong size");
        }
        inverse[v] = linalg::inverse(f, basis[v]);
      } else {
        basis[v]    = Matrix::identity(n);
        inverse[v]  = basis[v];
        plus_dim[v] = n;
      }
    }

    auto range = [&](VertexId v, Sign s) -> std::pair<std::size_t, std::size_t> {
      switch (s) {
        case Sign::plus:
          return {0, plus_dim[v]};
        case Sign::minus:
          return {plus_dim[v], m.dimension()[v] - plus_dim[v]};
        default:
          return {0, m.dimension()[v]};
      }
    };

    DimensionVector d(std::vector<std::size_t>(sp.quiver().num_vertices(), 0));
    for (VertexId w = 0; w < d.size(); ++w) {
      auto const& o = split.map.vertex_origin[w];
      d[w]          = range(o.original, o.sign).second;
    }
    std::vector<Matrix> ms;
    for (ArrowId b = 0; b < sp.quiver().num_arrows(); ++b) {
      auto const& o     = split.map.arrow_origin[b];
      auto const& arrow = q.arrow(o.original);
      Matrix      full  = linalg::multiply(
          f, inverse[arrow.head], linalg::multiply(f, m.matrix(o.original), basis[arrow.tail]));
      auto [r0, nr] = range(arrow.head, o.head_sign);
      auto [c0, nc] = range(arrow.tail, o.tail_sign);
      ms.push_back(full.block(r0, c0, nr, nc));
    }
    return Representation(split.presentation, f, std::move(d), std::move(ms));
  }

  std::string split_map_table(Presentation const& original, SplitResult const& split) {
    Quiver const& q  = original.quiver();
    Quiver const& sq = split.presentation->quiver();
    std::vector<std::pair<std::string, std::string>> rows;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      std::string img;
      for (VertexId w : split.map.vertex_map[v]) {
        img += (img.empty() ? "" : " ") + sq.vertex_name(w);
      }
      rows.emplace_back(q.vertex_name(v), img);
    }
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      std::string img;
      for (ArrowId b : split.map.arrow_map[a]) {
        img += (img.empty() ? "" : " ") + sq.arrow(b).name;
      }
      rows.emplace_back(q.arrow(a).name, img.empty() ? "-" : img);
    }
    std::size_t width = 0;
    for (auto const& r : rows) {
      width = std::max(width, r.first.size());
    }
    std::ostringstream out;
    for (auto const& [from, to] : rows) {
      out << from << std::string(width - from.size() + 2, ' ') << to << "\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Envelope
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class EnvelopeSearch {
     public:
      explicit EnvelopeSearch(Presentation const& p) : _p(p), _q(p.quiver()) {
        for (std::size_t i = 0; i < p.relations().size(); ++i) {
          auto const* z = std::get_if<ZeroPath>(&p.relations()[i]);
          if (z != nullptr && z->path.length() == 2) {
            _candidates.push_back(i);
          }
        }
        _chosen.assign(_candidates.size(), false);
      }

      std::optional<Presentation> run() {
        if (search(0)) {
          return build();
        }
        return std::nullopt;
      }

      // Witnesses of the presentation with every candidate kept, for
      // diagnostics when the search fails.
      std::vector<Witness> diagnostics() {
        std::fill(_chosen.begin(), _chosen.end(), true);
        return is_skewed_gentle(build()).witnesses;
      }

     private:
      Presentation build() const {
        std::vector<Relation> rels;
        std::size_t           k = 0;
        for (std::size_t i = 0; i < _p.relations().size(); ++i) {
          auto const& r = _p.relations()[i];
          if (k < _candidates.size() && _candidates[k] == i) {
            if (_chosen[k]) {
              rels.push_back(r);
            }
            ++k;
          } else if (std::holds_alternative<IdempotentLoop>(r)) {
            rels.push_back(r);
          }
        }
        return Presentation(_q, std::move(rels), Provenance::envelope);
      }

      std::pair<ArrowId, ArrowId> pair(std::size_t k) const {
        auto const& a = std::get<ZeroPath>(_p.relations()[_candidates[k]]).path.arrows();
        return {a[0], a[1]};
      }

      // At most one chosen relation starts with each arrow and at most one
      // ends with it; special squares count as chosen.
      bool in_ideal_ok() const {
        std::vector<int> first(_q.num_arrows(), 0), second(_q.num_arrows(), 0);
        for (ArrowId e : _q.special_loops()) {
          ++first[e];
          ++second[e];
        }
        for (std::size_t k = 0; k < _candidates.size(); ++k) {
          if (_chosen[k]) {
            auto [a, b] = pair(k);
            if (++first[a] > 1 || ++second[b] > 1) {
              return false;
            }
          }
        }
        return true;
      }

      // Even with every undecided candidate included, each arrow must have at
      // most one continuation outside the ideal on either side.
      bool outside_ok(std::size_t next) const {
        std::set<std::pair<ArrowId, ArrowId>> in;
        for (ArrowId e : _q.special_loops()) {
          in.emplace(e, e);
        }
        for (std::size_t k = 0; k < _candidates.size(); ++k) {
          if (k >= next || _chosen[k]) {
            in.insert(pair(k));
          }
        }
        for (ArrowId a = 0; a < _q.num_arrows(); ++a) {
          int succ = 0, pred = 0;
          for (ArrowId b : _q.arrows_out(_q.arrow(a).head)) {
            succ += in.count({a, b}) == 0;
          }
          for (ArrowId b : _q.arrows_in(_q.arrow(a).tail)) {
            pred += in.count({b, a}) == 0;
          }
          if (succ > 1 || pred > 1) {
            return false;
          }
        }
        return true;
      }

      bool search(std::size_t k) {
        if (!in_ideal_ok() || !outside_ok(k)) {
          return false;
        }
        if (k == _candidates.size()) {
          return static_cast<bool>(is_skewed_gentle(build()));
        }
        _chosen[k] = true;
        if (search(k + 1)) {
          return true;
        }
        _chosen[k] = false;
        return search(k + 1);
      }

      Presentation const&      _p;
      Quiver const&            _q;
      std::vector<std::size_t> _candidates;
      std::vector<bool>        _chosen;
    };

  }  // namespace

  Presentation skewed_gentle_envelope(Presentation const& p) {
    auto verdict = is_clannish(p);
    if (!verdict) {
      throw UnsupportedError("presentation is not clannish (" + first_witness(verdict) + ")");
    }
    EnvelopeSearch search(p);
    if (auto out = search.run()) {
      return *out;
    }
    std::string msg = "no set of length-two relations gives a skewed-gentle presentation";
    auto        why = search.diagnostics();
    if (!why.empty()) {
      msg += "; keeping all of them still fails " + why.front().clause + ": "
             + why.front().message;
    }
    throw Error(msg);
  }

}  // namespace quivertk
