#include "quivertk/stability.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "quivertk/errors.hpp"
#include "quivertk/repvar.hpp"

namespace quivertk {

  long long weight_pairing(Weight const& theta, DimensionVector const& d) {
    if (theta.size() != d.size()) {
      throw ValidationError("weight has " + std::to_string(theta.size())
                            + " entries, dimension vector " + std::to_string(d.size()));
    }
    long long out = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      out += theta[i] * static_cast<long long>(d[i]);
    }
    return out;
  }

  namespace {

    using Vec = std::vector<std::uint32_t>;

    // A subspace of F_p^n in reduced row echelon form.
    struct Subspace {
      std::vector<Vec>         rows;
      std::vector<std::size_t> pivots;
    };

    void all_rref(std::size_t n, std::uint32_t p, std::vector<Subspace>& out) {
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> piv(k);
        // Pivot sets as increasing sequences.
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t from) {
          if (i == k) {
            std::vector<std::pair<std::size_t, std::size_t>> free;
            std::vector<bool>                                is_pivot(n, false);
            for (auto c : piv) {
              is_pivot[c] = true;
            }
            for (std::size_t r = 0; r < k; ++r) {
              for (std::size_t c = piv[r] + 1; c < n; ++c) {
                if (!is_pivot[c]) {
                  free.emplace_back(r, c);
                }
              }
            }
            Subspace s;
            s.pivots = piv;
            s.rows.assign(k, Vec(n, 0));
            for (std::size_t r = 0; r < k; ++r) {
              s.rows[r][piv[r]] = 1;
            }
            while (true) {
              out.push_back(s);
              std::size_t j = 0;
              while (j < free.size()) {
                auto [r, c] = free[j];
                if (++s.rows[r][c] < p) {
                  break;
                }
                s.rows[r][c] = 0;
                ++j;
              }
              if (j == free.size()) {
                break;
              }
            }
            return;
          }
          for (std::size_t c = from; c + (k - i) <= n; ++c) {
            piv[i] = c;
            choose(i + 1, c + 1);
          }
        };
        choose(0, 0);
      }
    }

    // Number of subspaces of F_p^n.
    double subspace_count(std::size_t n, std::uint32_t p) {
      // Gaussian binomials via the recurrence [n,k] = [n-1,k-1] + p^k [n-1,k].
      std::vector<double> row{1};
      for (std::size_t m = 1; m <= n; ++m) {
        std::vector<double> next(m + 1, 0);
        double              pk = 1;
        for (std::size_t k = 0; k <= m; ++k) {
          next[k] = (k > 0 ? row[k - 1] : 0) + (k < m ? pk * row[k] : 0);
          pk *= p;
        }
        row = std::move(next);
      }
      double total = 0;
      for (double x : row) {
        total += x;
      }
      return total;
    }

    bool in_span(Subspace const& s, Vec x, std::uint32_t p) {
      for (std::size_t r = 0; r < s.rows.size(); ++r) {
        std::uint64_t c = x[s.pivots[r]];
        if (c == 0) {
          continue;
        }
        for (std::size_t j = 0; j < x.size(); ++j) {
          x[j] = static_cast<std::uint32_t>((x[j] + (p - c) * s.rows[r][j]) % p);
        }
      }
      for (auto v : x) {
        if (v != 0) {
          return false;
        }
      }
      return true;
    }

    using IntMatrix = std::vector<Vec>;

    IntMatrix to_int(Matrix const& m, Field const& f) {
      IntMatrix out(m.rows(), Vec(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out[i][j] = static_cast<std::uint32_t>(numerator(f.normalize(m(i, j))));
        }
      }
      return out;
    }

    Vec apply(IntMatrix const& a, Vec const& x, std::uint32_t p) {
      Vec out(a.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
          acc = (acc + static_cast<std::uint64_t>(a[i][j]) * x[j]) % p;
        }
        out[i] = static_cast<std::uint32_t>(acc);
      }
      return out;
    }

    Matrix basis_matrix(Subspace const& s, std::size_t n) {
      Matrix out(n, s.rows.size());
      for (std::size_t r = 0; r < s.rows.size(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
          out(i, r) = s.rows[r][i];
        }
      }
      return out;
    }

  }  // namespace

  std::vector<Subrepresentation> subrepresentations(Representation const& m,
                                                    StabilityGuard const& guard) {
    Field const& f = m.field();
    if (!f.is_prime()) {
      throw UnsupportedError("subrepresentations can only be enumerated over a prime field");
    }
    Quiver const& q = m.quiver();
    auto const&   d = m.dimension();
    if (total_dimension(d) > guard.max_total_dim) {
      throw GuardError("total dimension " + std::to_string(total_dimension(d))
                       + " exceeds the limit " + std::to_string(guard.max_total_dim));
    }
    std::uint32_t p          = f.characteristic();
    double        candidates = 1;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      candidates *= subspace_count(d[v], p);
    }
    if (candidates > static_cast<double>(guard.max_candidates)) {
      std::ostringstream msg;
      msg << "about " << static_cast<unsigned long long>(candidates)
          << " candidate subspace tuples exceed the limit " << guard.max_candidates;
      throw GuardError(msg.str());
    }

    std::vector<std::vector<Subspace>> spaces(q.num_vertices());
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      all_rref(d[v], p, spaces[v]);
    }
    std::vector<IntMatrix> maps;
    for (auto const& x : m.matrices()) {
      maps.push_back(to_int(x, f));
    }
    // Arrows to check once vertex v is assigned: both ends <= v, one == v.
    std::vector<std::vector<ArrowId>> closing(q.num_vertices());
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      closing[std::max(q.arrow(a).tail, q.arrow(a).head)].push_back(a);
    }

    std::vector<Subrepresentation> out;
    std::vector<std::size_t>       choice(q.num_vertices(), 0);
    std::function<void(VertexId)>  assign = [&](VertexId v) {
      if (v == q.num_vertices()) {
        Subrepresentation s;
        for (VertexId w = 0; w < q.num_vertices(); ++w) {
          auto const& sub = spaces[w][choice[w]];
          s.dim.values.push_back(sub.rows.size());
          s.bases.push_back(basis_matrix(sub, d[w]));
        }
        out.push_back(std::move(s));
        return;
      }
      for (std::size_t i = 0; i < spaces[v].size(); ++i) {
        choice[v] = i;
        bool closed = true;
        for (ArrowId a : closing[v]) {
          auto const& src = spaces[q.arrow(a).tail][choice[q.arrow(a).tail]];
          auto const& dst = spaces[q.arrow(a).head][choice[q.arrow(a).head]];
          for (auto const& u : src.rows) {
            if (!in_span(dst, apply(maps[a], u, p), p)) {
              closed = false;
              break;
            }
          }
          if (!closed) {
            break;
          }
        }
        if (closed) {
          assign(v + 1);
        }
      }
    };
    assign(0);
    return out;
  }

  std::set<DimensionVector> subrep_dimension_vectors(Representation const& m,
                                                     StabilityGuard const& guard) {
    std::set<DimensionVector> out;
    for (auto const& s : subrepresentations(m, guard)) {
      out.insert(s.dim);
    }
    return out;
  }

  bool is_subrepresentation(Representation const& m, Subrepresentation const& s) {
    Quiver const& q = m.quiver();
    Field const&  f = m.field();
    if (s.bases.size() != q.num_vertices() || s.dim.size() != q.num_vertices()) {
      return false;
    }
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      auto const& b = s.bases[v];
      if (b.rows() != m.dimension()[v] || b.cols() != s.dim[v] || linalg::rank(f, b) != s.dim[v]) {
        return false;
      }
    }
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto const& src = s.bases[q.arrow(a).tail];
      auto const& dst = s.bases[q.arrow(a).head];
      Matrix      img = linalg::multiply(f, m.matrix(a), src);
      if (linalg::rank(f, linalg::hconcat(dst, img)) != dst.cols()) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(Stability s) {
    switch (s) {
      case Stability::unstable:
        return "unstable";
      case Stability::semistable_not_stable:
        return "semistable";
      case Stability::stable:
        return "stable";
    }
    return "unknown";
  }

  StabilityVerdict check_stability(Representation const& m,
                                   Weight const&         theta,
                                   StabilityGuard const& guard) {
    StabilityVerdict v;
    auto const&      d = m.dimension();
    v.total            = weight_pairing(theta, d);
    if (v.total != 0) {
      v.stability = Stability::unstable;
      return v;
    }
    if (total_dimension(d) == 0) {
      v.stability = Stability::semistable_not_stable;
      return v;
    }
    std::optional<Subrepresentation> balanced;
    for (auto& s : subrepresentations(m, guard)) {
      std::size_t n = total_dimension(s.dim);
      if (n == 0 || s.dim == d) {
        continue;
      }
      long long t = weight_pairing(theta, s.dim);
      if (t > 0) {
        v.stability         = Stability::unstable;
        v.certificate_value = t;
        v.certificate       = std::move(s);
        return v;
      }
      if (t == 0 && !balanced) {
        balanced = std::move(s);
      }
    }
    if (balanced) {
      v.stability   = Stability::semistable_not_stable;
      v.certificate = std::move(balanced);
    } else {
      v.stability = Stability::stable;
    }
    return v;
  }

  bool replay_certificate(Representation const& m, Weight const& theta, StabilityVerdict const& v) {
    if (weight_pairing(theta, m.dimension()) != v.total) {
      return false;
    }
    auto proper_nonzero = [&](Subrepresentation const& s) {
      return is_subrepresentation(m, s) && total_dimension(s.dim) > 0 && s.dim != m.dimension();
    };
    switch (v.stability) {
      case Stability::unstable:
        if (v.total != 0) {
          return true;
        }
        return v.certificate && proper_nonzero(*v.certificate)
               && weight_pairing(theta, v.certificate->dim) == v.certificate_value
               && v.certificate_value > 0;
      case Stability::semistable_not_stable:
        if (total_dimension(m.dimension()) == 0) {
          return v.total == 0;
        }
        return v.total == 0 && v.certificate && proper_nonzero(*v.certificate)
               && weight_pairing(theta, v.certificate->dim) == 0;
      case Stability::stable:
        return v.total == 0 && !v.certificate;
    }
    return false;
  }

  std::vector<PolystableClass> group_polystable_factors(std::vector<Representation> const& factors,
                                                        std::vector<bool> const& verified_stable) {
    if (verified_stable.size() != factors.size()) {
      throw ValidationError("one stability flag per factor expected");
    }
    std::vector<PolystableClass> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!verified_stable[i]) {
        throw ValidationError("factor " + std::to_string(i) + " is not marked stable");
      }
      bool placed = false;
      for (auto& c : out) {
        auto const& r = factors[c.representative];
        if (r.dimension() == factors[i].dimension() && hom_dim(r, factors[i]) >= 1
            && hom_dim(factors[i], r) >= 1) {
          c.members.push_back(i);
          ++c.multiplicity;
          placed = true;
          break;
        }
      }
      if (!placed) {
        out.push_back({i, {i}, 1});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moduli shapes
  ////////////////////////////////////////////////////////////////////////

  DecompositionFile parse_decomposition(std::string const& text) {
    DecompositionFile  out;
    std::istringstream in(text);
    std::string        raw;
    std::size_t        line = 0;
    while (std::getline(in, raw)) {
      ++line;
      auto hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream       words(raw);
      std::vector<std::string> w;
      for (std::string s; words >> s;) {
        w.push_back(s);
      }
      if (w.empty()) {
        continue;
      }
      if (w[0] == "presentation") {
        if (w.size() != 2) {
          throw ParseError("expected 'presentation <path>'", line, 1);
        }
        out.presentation_path = w[1];
      } else if (w[0] == "clannish") {
        if (w.size() != 1) {
          throw ParseError("'clannish' takes no arguments", line, 1);
        }
        out.clannish_asserted = true;
      } else if (w[0] == "factor") {
        if (w.size() < 3) {
          throw ParseError("expected 'factor <descriptor> m=<int> [c=<0|1>] [stable=<0|1>]'", line,
                           1);
        }
        DecompositionFactor f;
        f.descriptor   = w[1];
        bool has_m     = false;
        bool has_c     = false;
        for (std::size_t i = 2; i < w.size(); ++i) {
          auto eq = w[i].find('=');
          if (eq == std::string::npos) {
            throw ParseError("expected <key>=<value>, got '" + w[i] + "'", line, 1);
          }
          std::string key = w[i].substr(0, eq), value = w[i].substr(eq + 1);
          if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("'" + key + "' needs a nonnegative integer", line, 1);
          }
          unsigned long n = std::stoul(value);
          if (key == "m") {
            f.multiplicity = n;
            has_m          = true;
          } else if (key == "c") {
            if (n > 1) {
              throw ParseError("c must be 0 or 1", line, 1);
            }
            f.c_value = static_cast<int>(n);
            has_c     = true;
          } else if (key == "stable") {
            if (n > 1) {
              throw ParseError("stable must be 0 or 1", line, 1);
            }
            f.stable = n == 1;
          } else {
            throw ParseError("unknown key '" + key + "'", line, 1);
          }
        }
        if (!has_m) {
          throw ParseError("factor needs m=<int>", line, 1);
        }
        if (!has_c) {
          if (f.descriptor.rfind("band:", 0) == 0) {
            f.c_value = 1;
          } else if (f.descriptor.rfind("string:", 0) == 0) {
            f.c_value = 0;
          } else {
            throw ParseError("factor '" + f.descriptor + "' needs c=<0|1>", line, 1);
          }
        }
        out.input.factors.push_back(std::move(f));
      } else {
        throw ParseError("unknown keyword '" + w[0] + "'", line, 1);
      }
    }
    return out;
  }

  std::size_t ModuliShape::dimension() const {
    std::size_t out = 0;
    for (auto e : exponents) {
      out += e;
    }
    return out;
  }

  std::string to_string(ModuliShape const& s) {
    if (s.exponents.empty()) {
      return "point";
    }
    std::string out;
    for (auto e : s.exponents) {
      out += (out.empty() ? "" : " x ") + std::string("P^") + std::to_string(e);
    }
    return out;
  }

  ModuliShape moduli_shape(StableDecompositionInput const& dec) {
    if (!dec.clannish) {
      throw UnsupportedError(
          "moduli shapes are only determined for clannish presentations; none was verified");
    }
    std::set<std::string> seen;
    ModuliShape           out;
    for (auto const& f : dec.factors) {
      if (!seen.insert(f.descriptor).second) {
        throw ValidationError("factor '" + f.descriptor + "' listed twice");
      }
      if (f.multiplicity == 0) {
        throw ValidationError("factor '" + f.descriptor + "' has multiplicity 0");
      }
      if (!f.stable) {
        throw ValidationError("factor '" + f.descriptor + "' is not stable");
      }
      if (f.c_value == 1) {
        out.exponents.push_back(f.multiplicity);
      }
    }
    return out;
  }

}  // namespace quivertk
