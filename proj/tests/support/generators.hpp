#pragma once

// Seeded random presentations and representations for property tests.

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quivertk/classify.hpp"
#include "quivertk/quiver.hpp"
#include "quivertk/representation.hpp"

namespace testing_support {

  using namespace quivertk;

  struct GeneratorOptions {
    std::size_t max_vertices      = 4;
    std::size_t max_arrows        = 6;
    std::size_t max_relations     = 4;
    std::size_t max_relation_len  = 4;
    double      special_chance    = 0.25;
    double      loop_chance       = 0.1;
    double      linear_chance     = 0.0;
    // Keep every vertex at in- and out-degree <= 2 (special loops included).
    bool bounded_degree = false;
    // Add length-two zero relations until every ordinary arrow has at most
    // one continuation outside the ideal on each side.
    bool complete_continuations = false;
  };

  inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline bool chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  }

  inline std::vector<ArrowId> random_walk(Quiver const& q, std::mt19937_64& rng, std::size_t len) {
    std::vector<ArrowId> ordinary;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      if (!q.arrow(a).special) {
        ordinary.push_back(a);
      }
    }
    if (ordinary.empty()) {
      return {};
    }
    std::vector<ArrowId> w{ordinary[uniform(rng, 0, ordinary.size() - 1)]};
    while (w.size() < len) {
      auto out = q.arrows_out(q.arrow(w.back()).head);
      if (out.empty()) {
        break;
      }
      w.push_back(out[uniform(rng, 0, out.size() - 1)]);
    }
    return w;
  }

  inline Presentation random_presentation(std::mt19937_64& rng, GeneratorOptions const& o = {}) {
    Quiver      q;
    std::size_t n = uniform(rng, 1, o.max_vertices);
    for (std::size_t v = 0; v < n; ++v) {
      q.add_vertex(std::to_string(v + 1));
    }
    std::vector<int> out_deg(n, 0), in_deg(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (chance(rng, o.special_chance)) {
        q.add_arrow("e" + std::to_string(v + 1), v, v, true);
        ++out_deg[v];
        ++in_deg[v];
      }
    }
    std::size_t m     = uniform(rng, 0, o.max_arrows);
    std::size_t named = 0;
    for (std::size_t i = 0; i < m * 3 && named < m; ++i) {
      VertexId t = uniform(rng, 0, n - 1);
      VertexId h = chance(rng, o.loop_chance) ? t : uniform(rng, 0, n - 1);
      if (t == h && !chance(rng, o.loop_chance)) {
        continue;
      }
      if (o.bounded_degree && (out_deg[t] >= 2 || in_deg[h] >= 2)) {
        continue;
      }
      q.add_arrow(std::string(1, static_cast<char>('a' + named)), t, h);
      ++out_deg[t];
      ++in_deg[h];
      ++named;
    }

    std::vector<Relation>          rels;
    std::set<std::vector<ArrowId>> zero_words;
    std::size_t                    r = uniform(rng, 0, o.max_relations);
    for (std::size_t i = 0; i < r; ++i) {
      auto w = random_walk(q, rng, uniform(rng, 2, std::max<std::size_t>(2, o.max_relation_len)));
      if (w.size() < 2) {
        continue;
      }
      if (chance(rng, o.linear_chance)) {
        // A second parallel path of the same endpoints, if one exists.
        for (int tries = 0; tries < 10; ++tries) {
          auto x = random_walk(q, rng, uniform(rng, 2, 3));
          if (x.size() >= 2 && x != w && q.arrow(x.front()).tail == q.arrow(w.front()).tail
              && q.arrow(x.back()).head == q.arrow(w.back()).head) {
            rels.emplace_back(LinearCombination{{{Rational(1), Path(q, w)},
                                                 {Rational(-1), Path(q, x)}}});
            break;
          }
        }
        continue;
      }
      if (zero_words.insert(w).second) {
        rels.emplace_back(ZeroPath{Path(q, w)});
      }
    }

    if (o.complete_continuations) {
      for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).special) {
          continue;
        }
        // Successors outside the ideal.
        std::vector<ArrowId> outside;
        for (ArrowId b : q.arrows_out(q.arrow(a).head)) {
          if (!zero_words.count({a, b})) {
            outside.push_back(b);
          }
        }
        std::shuffle(outside.begin(), outside.end(), rng);
        for (std::size_t k = 1; k < outside.size(); ++k) {
          if (!q.arrow(outside[k]).special) {
            zero_words.insert({a, outside[k]});
            rels.emplace_back(ZeroPath{Path(q, {a, outside[k]})});
          }
        }
        outside.clear();
        for (ArrowId b : q.arrows_in(q.arrow(a).tail)) {
          if (!zero_words.count({b, a})) {
            outside.push_back(b);
          }
        }
        std::shuffle(outside.begin(), outside.end(), rng);
        for (std::size_t k = 1; k < outside.size(); ++k) {
          if (!q.arrow(outside[k]).special) {
            zero_words.insert({outside[k], a});
            rels.emplace_back(ZeroPath{Path(q, {outside[k], a})});
          }
        }
      }
    }

    for (ArrowId e : q.special_loops()) {
      rels.emplace_back(IdempotentLoop{e});
    }
    return Presentation(std::move(q), std::move(rels));
  }

  // The first `count` clannish presentations of a seeded generator run.
  inline std::vector<Presentation> clannish_corpus(std::uint64_t seed, std::size_t count) {
    std::mt19937_64  rng(seed);
    GeneratorOptions o;
    o.bounded_degree         = true;
    o.complete_continuations = true;
    o.special_chance         = 0.35;
    std::vector<Presentation> out;
    while (out.size() < count) {
      auto p = random_presentation(rng, o);
      if (is_clannish(p)) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  inline Matrix random_matrix(Field const& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix      m(rows, cols);
    std::size_t top = f.is_prime() ? f.characteristic() - 1 : 4;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = Rational(static_cast<long long>(uniform(rng, 0, top)));
      }
    }
    return m;
  }

  // Random matrices, with arrows mentioned by relations set to zero and
  // special loops given random idempotents.  Always a valid point.
  inline Representation random_valid_rep(std::shared_ptr<Presentation const> p,
                                         Field const&                        f,
                                         DimensionVector const&              d,
                                         std::mt19937_64&                    rng) {
    Quiver const&     q = p->quiver();
    std::vector<bool> constrained(q.num_arrows(), false);
    for (auto const& r : p->relations()) {
      if (!std::holds_alternative<IdempotentLoop>(r)) {
        for (ArrowId a : relation_arrows(r)) {
          constrained[a] = true;
        }
      }
    }
    std::vector<Matrix> ms;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto const& x = q.arrow(a);
      if (x.special) {
        // Conjugate of diag(1..1, 0..0) by a random unitriangular matrix.
        std::size_t n = d[x.tail];
        std::size_t r = uniform(rng, 0, n);
        Matrix      u = Matrix::identity(n);
        Matrix      ui = Matrix::identity(n);
        if (n >= 2) {
          Rational c = Rational(static_cast<long long>(uniform(rng, 0, 2)));
          u(0, n - 1)  = c;
          ui(0, n - 1) = f.neg(c);
        }
        Matrix e(n, n);
        for (std::size_t i = 0; i < r; ++i) {
          e(i, i) = 1;
        }
        ms.push_back(linalg::multiply(f, u, linalg::multiply(f, e, ui)));
      } else if (constrained[a] && !chance(rng, 0.3)) {
        ms.emplace_back(d[x.head], d[x.tail]);
      } else {
        ms.push_back(random_matrix(f, d[x.head], d[x.tail], rng));
      }
    }
    Representation m(p, f, d, std::move(ms));
    if (!check_rep(m)) {
      // Fall back to zero on the constrained arrows.
      for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        if (constrained[a]) {
          m = m.with_matrix(a, Matrix(d[q.arrow(a).head], d[q.arrow(a).tail]));
        }
      }
    }
    return m;
  }

  inline DimensionVector random_dimension(Quiver const& q, std::mt19937_64& rng, std::size_t max) {
    DimensionVector d;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      d.values.push_back(uniform(rng, 0, max));
    }
    return d;
  }

}  // namespace testing_support
