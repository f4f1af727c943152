#include "quivertk/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quivertk/errors.hpp"
#include "quivertk/split.hpp"

namespace quivertk {

  std::string to_string(WitnessKind k) {
    switch (k) {
      case WitnessKind::special_loop:
        return "special-loop";
      case WitnessKind::non_monomial:
        return "non-monomial";
      case WitnessKind::relation_length:
        return "relation-length";
      case WitnessKind::out_degree:
        return "out-degree";
      case WitnessKind::in_degree:
        return "in-degree";
      case WitnessKind::successors_in_ideal:
        return "successors-in-ideal";
      case WitnessKind::successors_outside:
        return "successors-outside-ideal";
      case WitnessKind::predecessors_in_ideal:
        return "predecessors-in-ideal";
      case WitnessKind::predecessors_outside:
        return "predecessors-outside-ideal";
      case WitnessKind::special_boundary:
        return "special-boundary";
      case WitnessKind::special_square:
        return "special-square";
      case WitnessKind::missing_idempotent:
        return "missing-idempotent";
      case WitnessKind::infinite_cycle:
        return "infinite-cycle";
      case WitnessKind::unsupported:
        return "unsupported";
    }
    return "unknown";
  }

  namespace {

    using PairSet = std::set<std::pair<ArrowId, ArrowId>>;

    // (first, second) for every zero relation of length two.
    PairSet length_two_pairs(std::vector<Path> const& zero_paths) {
      PairSet out;
      for (auto const& p : zero_paths) {
        if (p.length() == 2) {
          out.emplace(p.arrows()[0], p.arrows()[1]);
        }
      }
      return out;
    }

    std::string name(Quiver const& q, ArrowId a) {
      return q.arrow(a).name;
    }

    std::string pair_word(Quiver const& q, ArrowId first, ArrowId second) {
      return name(q, second) + "*" + name(q, first);
    }

    // Squares e*e of the special loops, as zero paths.
    std::vector<Path> special_squares(Quiver const& q) {
      std::vector<Path> out;
      for (ArrowId e : q.special_loops()) {
        out.emplace_back(q, std::vector<ArrowId>{e, e});
      }
      return out;
    }

    void add(Verdict& v, Witness w) {
      v.holds = false;
      v.witnesses.push_back(std::move(w));
    }

    void check_degrees(Quiver const& q, std::string const& clause, Verdict& v) {
      for (VertexId x = 0; x < q.num_vertices(); ++x) {
        auto out = q.arrows_out(x), in = q.arrows_in(x);
        if (out.size() > 2) {
          add(v,
              {clause,
               WitnessKind::out_degree,
               std::to_string(out.size()) + " arrows leave vertex " + q.vertex_name(x),
               {x},
               out,
               std::nullopt});
        }
        if (in.size() > 2) {
          add(v,
              {clause,
               WitnessKind::in_degree,
               std::to_string(in.size()) + " arrows enter vertex " + q.vertex_name(x),
               {x},
               in,
               std::nullopt});
        }
      }
    }

    // Continuation clauses.  `arrows` restricts which arrows are checked,
    // `in_ideal_bound` enables the "at most one continuation in the ideal"
    // half (gentle only).
    void check_continuations(Quiver const&               q,
                             PairSet const&              in_ideal,
                             std::vector<ArrowId> const& arrows,
                             bool                        in_ideal_bound,
                             std::string const&          clause,
                             Verdict&                    v) {
      for (ArrowId a : arrows) {
        std::vector<ArrowId> succ_in, succ_out, pred_in, pred_out;
        for (ArrowId b : q.arrows_out(q.arrow(a).head)) {
          (in_ideal.count({a, b}) ? succ_in : succ_out).push_back(b);
        }
        for (ArrowId b : q.arrows_in(q.arrow(a).tail)) {
          (in_ideal.count({b, a}) ? pred_in : pred_out).push_back(b);
        }
        if (in_ideal_bound && succ_in.size() > 1) {
          add(v,
              {clause,
               WitnessKind::successors_in_ideal,
               pair_word(q, a, succ_in[0]) + " and " + pair_word(q, a, succ_in[1])
                   + " are both relations",
               {},
               {a, succ_in[0], succ_in[1]},
               std::nullopt});
        }
        if (succ_out.size() > 1) {
          add(v,
              {clause,
               WitnessKind::successors_outside,
               pair_word(q, a, succ_out[0]) + " and " + pair_word(q, a, succ_out[1])
                   + " are both outside the ideal",
               {},
               {a, succ_out[0], succ_out[1]},
               std::nullopt});
        }
        if (in_ideal_bound && pred_in.size() > 1) {
          add(v,
              {clause,
               WitnessKind::predecessors_in_ideal,
               pair_word(q, pred_in[0], a) + " and " + pair_word(q, pred_in[1], a)
                   + " are both relations",
               {},
               {a, pred_in[0], pred_in[1]},
               std::nullopt});
        }
        if (pred_out.size() > 1) {
          add(v,
              {clause,
               WitnessKind::predecessors_outside,
               pair_word(q, pred_out[0], a) + " and " + pair_word(q, pred_out[1], a)
                   + " are both outside the ideal",
               {},
               {a, pred_out[0], pred_out[1]},
               std::nullopt});
        }
      }
    }

    std::string cycle_word(Quiver const& q, std::vector<ArrowId> const& cycle) {
      std::string out;
      for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) {
        out += (out.empty() ? "" : "*") + name(q, *it);
      }
      return out;
    }

    void check_monomial_finite(Quiver const&            q,
                               std::vector<Path> const& zero_paths,
                               std::string const&       clause,
                               bool                     on_split,
                               Verdict&                 v) {
      if (auto cycle = find_infinite_cycle(q, zero_paths)) {
        Witness w{clause,
                  WitnessKind::infinite_cycle,
                  "the cycle " + cycle_word(q, *cycle) + " has nonzero powers"
                      + (on_split ? " in the split presentation" : ""),
                  {},
                  *cycle,
                  std::nullopt};
        w.on_split_presentation = on_split;
        add(v, std::move(w));
      }
    }

    std::vector<ArrowId> all_arrows(Quiver const& q) {
      std::vector<ArrowId> out(q.num_arrows());
      for (ArrowId a = 0; a < out.size(); ++a) {
        out[a] = a;
      }
      return out;
    }

    // The gentle clauses on (q, zero_paths).  Relation indices in witnesses
    // refer to `relation_index`, which maps positions in zero_paths back to the
    // caller's relation list (nullopt for synthetic relations).
    void gentle_clauses(Quiver const&                                 q,
                        std::vector<Path> const&                      zero_paths,
                        std::vector<std::optional<std::size_t>> const& relation_index,
                        std::string const&                            prefix,
                        Verdict&                                      v) {
      for (std::size_t i = 0; i < zero_paths.size(); ++i) {
        if (zero_paths[i].length() != 2) {
          add(v,
              {prefix + "relations",
               WitnessKind::relation_length,
               "relation " + to_string(q, zero_paths[i]) + " has length "
                   + std::to_string(zero_paths[i].length()),
               {},
               zero_paths[i].arrows(),
               relation_index[i]});
        }
      }
      check_degrees(q, prefix + "degree", v);
      check_continuations(q, length_two_pairs(zero_paths), all_arrows(q), true,
                          prefix + "continuation", v);
      check_monomial_finite(q, zero_paths, prefix + "finite-dimension", false, v);
    }

    // Quiver with every special flag removed.
    Quiver ordinary_copy(Quiver const& q) {
      Quiver out;
      for (auto const& v : q.vertices()) {
        out.add_vertex(v);
      }
      for (auto const& a : q.arrows()) {
        out.add_arrow(a.name, a.tail, a.head, false);
      }
      return out;
    }

    bool occurs_in(std::vector<ArrowId> const& word, std::vector<ArrowId> const& pattern) {
      return std::search(word.begin(), word.end(), pattern.begin(), pattern.end()) != word.end();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Finite dimensionality of monomial algebras
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<ArrowId>> find_infinite_cycle(Quiver const&            q,
                                                          std::vector<Path> const& zero_paths) {
    std::size_t longest = 2;
    for (auto const& p : zero_paths) {
      longest = std::max(longest, p.length());
    }
    std::size_t const k = longest - 1;

    auto ends_with_relation = [&](std::vector<ArrowId> const& w) {
      for (auto const& p : zero_paths) {
        auto const& r = p.arrows();
        if (r.size() <= w.size() && std::equal(r.rbegin(), r.rend(), w.rbegin())) {
          return true;
        }
      }
      return false;
    };

    // States: paths of length k avoiding every zero path.
    std::vector<std::vector<ArrowId>>         states;
    std::map<std::vector<ArrowId>, std::size_t> index;
    std::vector<std::vector<ArrowId>>         frontier;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      frontier.push_back({a});
    }
    for (std::size_t len = 1; len < k; ++len) {
      std::vector<std::vector<ArrowId>> next;
      for (auto const& w : frontier) {
        for (ArrowId b : q.arrows_out(q.arrow(w.back()).head)) {
          auto x = w;
          x.push_back(b);
          if (!ends_with_relation(x)) {
            next.push_back(std::move(x));
          }
        }
      }
      frontier = std::move(next);
    }
    for (auto& w : frontier) {
      index.emplace(w, states.size());
      states.push_back(std::move(w));
    }

    std::vector<std::vector<std::size_t>> edges(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
      for (ArrowId b : q.arrows_out(q.arrow(states[s].back()).head)) {
        auto window = states[s];
        window.push_back(b);
        if (ends_with_relation(window)) {
          continue;
        }
        std::vector<ArrowId> t(window.begin() + 1, window.end());
        edges[s].push_back(index.at(t));
      }
    }

    // Iterative DFS with colours; on a back edge recover the cycle.
    std::vector<int>         colour(states.size(), 0);
    std::vector<std::size_t> parent(states.size(), 0);
    for (std::size_t root = 0; root < states.size(); ++root) {
      if (colour[root] != 0) {
        continue;
      }
      std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
      colour[root] = 1;
      while (!stack.empty()) {
        auto& [s, i] = stack.back();
        if (i == edges[s].size()) {
          colour[s] = 2;
          stack.pop_back();
          continue;
        }
        std::size_t t = edges[s][i++];
        if (colour[t] == 0) {
          colour[t] = 1;
          parent[t] = s;
          stack.emplace_back(t, 0);
        } else if (colour[t] == 1) {
          std::vector<std::size_t> cycle{t};
          for (std::size_t x = s; x != t; x = parent[x]) {
            cycle.push_back(x);
          }
          std::reverse(cycle.begin() + 1, cycle.end());
          std::vector<ArrowId> arrows;
          for (auto x : cycle) {
            arrows.push_back(states[x].back());
          }
          return arrows;
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Class checks
  ////////////////////////////////////////////////////////////////////////

  Verdict is_gentle_pair(Presentation const& p) {
    Verdict       v;
    Quiver const& q = p.quiver();
    for (ArrowId e : q.special_loops()) {
      add(v,
          {"gentle-special-loop",
           WitnessKind::special_loop,
           "special loop " + name(q, e) + " present",
           {},
           {e},
           std::nullopt});
    }
    std::vector<Path>                       zero;
    std::vector<std::optional<std::size_t>> index;
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& r = p.relations()[i];
      if (auto const* z = std::get_if<ZeroPath>(&r)) {
        zero.push_back(z->path);
        index.emplace_back(i);
      } else if (std::holds_alternative<LinearCombination>(r)) {
        add(v,
            {"gentle-relations",
             WitnessKind::non_monomial,
             "relation " + relation_expression(q, r) + " is not monomial",
             {},
             relation_arrows(r),
             i});
      }
    }
    gentle_clauses(q, zero, index, "gentle-", v);
    return v;
  }

  Verdict is_special_biserial(Presentation const& p) {
    Verdict       v;
    Quiver const& q = p.quiver();
    for (ArrowId e : q.special_loops()) {
      add(v,
          {"SB-special-loop",
           WitnessKind::special_loop,
           "special loop " + name(q, e) + " present",
           {},
           {e},
           std::nullopt});
    }
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& r = p.relations()[i];
      if (std::holds_alternative<LinearCombination>(r)) {
        add(v,
            {"SB-relations",
             WitnessKind::non_monomial,
             "relation " + relation_expression(q, r) + " is not monomial",
             {},
             relation_arrows(r),
             i});
      }
    }
    check_degrees(q, "SB1", v);
    auto zero = p.zero_paths();
    check_continuations(q, length_two_pairs(zero), all_arrows(q), false, "SB2", v);
    if (!q.has_special_loops()) {
      check_monomial_finite(q, zero, "SB-finite-dimension", false, v);
    }
    return v;
  }

  Verdict is_skewed_gentle(Presentation const& p) {
    Verdict       v;
    Quiver const& q   = p.quiver();
    Quiver        aux = ordinary_copy(q);
    std::vector<Path>                       zero;
    std::vector<std::optional<std::size_t>> index;
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& r = p.relations()[i];
      if (auto const* z = std::get_if<ZeroPath>(&r)) {
        zero.emplace_back(aux, z->path.arrows());
        index.emplace_back(i);
      } else if (std::holds_alternative<LinearCombination>(r)) {
        add(v,
            {"skewed-gentle-relations",
             WitnessKind::non_monomial,
             "relation " + relation_expression(q, r) + " is not monomial",
             {},
             relation_arrows(r),
             i});
      }
    }
    for (auto const& sq : special_squares(q)) {
      zero.emplace_back(aux, sq.arrows());
      index.emplace_back(std::nullopt);
    }
    gentle_clauses(aux, zero, index, "skewed-gentle-", v);
    return v;
  }

  Verdict is_clannish(Presentation const& p) {
    Verdict       v;
    Quiver const& q     = p.quiver();
    bool          shape = true;
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& r = p.relations()[i];
      if (std::holds_alternative<LinearCombination>(r)) {
        shape = false;
        add(v,
            {"C-relations",
             WitnessKind::non_monomial,
             "relation " + relation_expression(q, r) + " is neither a zero relation nor idempotent",
             {},
             relation_arrows(r),
             i});
        continue;
      }
      auto const* z = std::get_if<ZeroPath>(&r);
      if (z == nullptr) {
        continue;
      }
      auto const& a = z->path.arrows();
      if (q.arrow(a.front()).special || q.arrow(a.back()).special) {
        shape = false;
        add(v,
            {"C1",
             WitnessKind::special_boundary,
             "relation " + to_string(q, z->path) + " begins or ends with a special loop",
             {},
             a,
             i});
      }
      for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        if (a[j] == a[j + 1] && q.arrow(a[j]).special) {
          shape = false;
          add(v,
              {"C1",
               WitnessKind::special_square,
               "relation " + to_string(q, z->path) + " contains the square of "
                   + name(q, a[j]),
               {},
               a,
               i});
          break;
        }
      }
    }
    check_degrees(q, "C2", v);
    std::vector<ArrowId> ordinary;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      if (!q.arrow(a).special) {
        ordinary.push_back(a);
      }
    }
    check_continuations(q, length_two_pairs(p.zero_paths()), ordinary, false, "C3", v);
    if (shape) {
      auto fd = is_finite_dimensional(p);
      for (auto& w : fd.witnesses) {
        w.clause = "C-finite-dimension";
        add(v, std::move(w));
      }
    }
    return v;
  }

  Verdict is_finite_dimensional(Presentation const& p) {
    Verdict v;
    if (!p.quiver().has_special_loops()) {
      check_monomial_finite(p.quiver(), p.zero_paths(), "finite-dimension", false, v);
      return v;
    }
    auto split = split_relation_shapes(p);
    check_monomial_finite(split.presentation->quiver(),
                          split.presentation->zero_paths(),
                          "finite-dimension",
                          true,
                          v);
    return v;
  }

  ClassificationReport classify(Presentation const& p) {
    ClassificationReport report;
    report.gentle_pair      = is_gentle_pair(p);
    report.special_biserial = is_special_biserial(p);
    report.skewed_gentle    = is_skewed_gentle(p);
    report.clannish         = is_clannish(p);
    try {
      report.finite_dimensional = is_finite_dimensional(p);
    } catch (UnsupportedError const& e) {
      add(report.finite_dimensional,
          {"finite-dimension", WitnessKind::unsupported, e.what(), {}, {}, std::nullopt});
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness replay
  ////////////////////////////////////////////////////////////////////////

  bool replay_witness(Presentation const& p, Witness const& w) {
    Quiver const& q = p.quiver();
    // Skewed-gentle witnesses live on the presentation with e^2 added.
    bool              squares = w.clause.rfind("skewed-gentle", 0) == 0;
    std::vector<Path> zero    = p.zero_paths();
    if (squares) {
      for (auto const& sq : special_squares(q)) {
        zero.push_back(sq);
      }
    }
    PairSet pairs = length_two_pairs(zero);
    auto    arrow_ok = [&](std::size_t n) {
      if (w.arrows.size() != n) {
        return false;
      }
      return std::all_of(w.arrows.begin(), w.arrows.end(),
                         [&](ArrowId a) { return a < q.num_arrows(); });
    };
    auto relation = [&]() -> Relation const* {
      if (!w.relation || *w.relation >= p.relations().size()) {
        return nullptr;
      }
      return &p.relations()[*w.relation];
    };

    switch (w.kind) {
      case WitnessKind::special_loop:
        return arrow_ok(1) && q.arrow(w.arrows[0]).special;
      case WitnessKind::non_monomial: {
        auto const* r = relation();
        return r != nullptr && std::holds_alternative<LinearCombination>(*r);
      }
      case WitnessKind::relation_length: {
        if (!w.relation) {
          return false;
        }
        auto const* r = relation();
        auto const* z = r ? std::get_if<ZeroPath>(r) : nullptr;
        return z != nullptr && z->path.length() != 2;
      }
      case WitnessKind::out_degree:
      case WitnessKind::in_degree: {
        if (w.vertices.size() != 1 || w.vertices[0] >= q.num_vertices()) {
          return false;
        }
        auto actual = w.kind == WitnessKind::out_degree ? q.arrows_out(w.vertices[0])
                                                        : q.arrows_in(w.vertices[0]);
        return actual.size() > 2 && actual == w.arrows;
      }
      case WitnessKind::successors_in_ideal:
      case WitnessKind::successors_outside:
      case WitnessKind::predecessors_in_ideal:
      case WitnessKind::predecessors_outside: {
        if (!arrow_ok(3) || w.arrows[1] == w.arrows[2]) {
          return false;
        }
        ArrowId a = w.arrows[0];
        bool    successors = w.kind == WitnessKind::successors_in_ideal
                          || w.kind == WitnessKind::successors_outside;
        bool in = w.kind == WitnessKind::successors_in_ideal
                  || w.kind == WitnessKind::predecessors_in_ideal;
        for (std::size_t i = 1; i < 3; ++i) {
          ArrowId b = w.arrows[i];
          if (successors ? q.arrow(b).tail != q.arrow(a).head
                         : q.arrow(b).head != q.arrow(a).tail) {
            return false;
          }
          bool member = successors ? pairs.count({a, b}) > 0 : pairs.count({b, a}) > 0;
          if (member != in) {
            return false;
          }
        }
        return true;
      }
      case WitnessKind::special_boundary: {
        auto const* r = relation();
        auto const* z = r ? std::get_if<ZeroPath>(r) : nullptr;
        return z != nullptr
               && (q.arrow(z->path.arrows().front()).special
                   || q.arrow(z->path.arrows().back()).special);
      }
      case WitnessKind::special_square: {
        auto const* r = relation();
        auto const* z = r ? std::get_if<ZeroPath>(r) : nullptr;
        if (z == nullptr) {
          return false;
        }
        auto const& a = z->path.arrows();
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
          if (a[j] == a[j + 1] && q.arrow(a[j]).special) {
            return true;
          }
        }
        return false;
      }
      case WitnessKind::missing_idempotent: {
        if (!arrow_ok(1) || !q.arrow(w.arrows[0]).special) {
          return false;
        }
        return std::none_of(p.relations().begin(), p.relations().end(), [&](Relation const& r) {
          auto const* e = std::get_if<IdempotentLoop>(&r);
          return e != nullptr && e->loop == w.arrows[0];
        });
      }
      case WitnessKind::infinite_cycle: {
        Quiver const*      cq = &q;
        std::vector<Path>  czero = zero;
        std::shared_ptr<Presentation const> holder;
        if (w.on_split_presentation) {
          holder = split_relation_shapes(p).presentation;
          cq     = &holder->quiver();
          czero  = holder->zero_paths();
        }
        auto const& c = w.arrows;
        if (c.empty()) {
          return false;
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] >= cq->num_arrows()
              || cq->arrow(c[i]).head != cq->arrow(c[(i + 1) % c.size()]).tail) {
            return false;
          }
        }
        std::size_t longest = 2;
        for (auto const& z : czero) {
          longest = std::max(longest, z.length());
        }
        std::vector<ArrowId> word;
        while (word.size() < longest + 2 * c.size()) {
          word.insert(word.end(), c.begin(), c.end());
        }
        return std::none_of(czero.begin(), czero.end(), [&](Path const& z) {
          return occurs_in(word, z.arrows());
        });
      }
      case WitnessKind::unsupported:
        return true;
    }
    return false;
  }

}  // namespace quivertk
