#include "quivertk/repvar.hpp"

#include <random>

#include "quivertk/classify.hpp"
#include "quivertk/errors.hpp"

namespace quivertk {

  namespace {

    // Accumulates linear equations in a fixed set of unknowns, one equation
    // per row.
    class LinearSystem {
     public:
      LinearSystem(Field const& f, std::size_t unknowns) : _f(f), _unknowns(unknowns) {}

      // Appends rows for the entries of a rows x cols matrix equation and
      // returns the index of its first row.
      std::size_t add_equations(std::size_t count) {
        std::size_t first = _rows.size();
        _rows.resize(_rows.size() + count, std::vector<Rational>(_unknowns, Rational(0)));
        return first;
      }

      void add(std::size_t row, std::size_t unknown, Rational const& c) {
        if (c != 0) {
          _rows[row][unknown] = _f.add(_rows[row][unknown], c);
        }
      }

      std::size_t nullity() const {
        if (_unknowns == 0) {
          return 0;
        }
        if (_rows.empty()) {
          return _unknowns;
        }
        return _unknowns - linalg::rank(_f, Matrix::from_rows(_rows));
      }

     private:
      Field const&                       _f;
      std::size_t                        _unknowns;
      std::vector<std::vector<Rational>> _rows;
    };

    // Unknown offsets for one matrix per arrow, shaped like M.
    std::vector<std::size_t> arrow_offsets(Representation const& m, std::size_t& total) {
      std::vector<std::size_t> out;
      total = 0;
      for (auto const& x : m.matrices()) {
        out.push_back(total);
        total += x.rows() * x.cols();
      }
      return out;
    }

    // Adds coef * L X_a R to the equations starting at `row` (row-major over
    // the entries of the product).
    void add_sandwich(LinearSystem&          sys,
                      Field const&           f,
                      std::size_t            row,
                      Matrix const&          left,
                      std::size_t            offset,
                      std::size_t            x_cols,
                      Matrix const&          right,
                      Rational const&        coef) {
      for (std::size_t p = 0; p < left.rows(); ++p) {
        for (std::size_t q = 0; q < right.cols(); ++q) {
          std::size_t eq = row + p * right.cols() + q;
          for (std::size_t k = 0; k < left.cols(); ++k) {
            if (left(p, k) == 0) {
              continue;
            }
            for (std::size_t l = 0; l < right.rows(); ++l) {
              if (right(l, q) == 0) {
                continue;
              }
              sys.add(eq, offset + k * x_cols + l, f.mul(coef, f.mul(left(p, k), right(l, q))));
            }
          }
        }
      }
    }

    // Derivative of the path product at M in direction X.
    void add_path_derivative(LinearSystem&                   sys,
                             Representation const&           m,
                             std::vector<std::size_t> const& offsets,
                             std::size_t                     row,
                             Path const&                     path,
                             Rational const&                 coef) {
      Field const& f = m.field();
      auto const&  a = path.arrows();
      auto const&  d = m.dimension();
      for (std::size_t i = 0; i < a.size(); ++i) {
        Matrix right = Matrix::identity(d[path.source()]);
        for (std::size_t j = 0; j < i; ++j) {
          right = linalg::multiply(f, m.matrix(a[j]), right);
        }
        Matrix left = Matrix::identity(d[path.target()]);
        for (std::size_t j = a.size(); j-- > i + 1;) {
          left = linalg::multiply(f, left, m.matrix(a[j]));
        }
        add_sandwich(sys, f, row, left, offsets[a[i]], m.matrix(a[i]).cols(), right, coef);
      }
    }

    Matrix random_matrix(Field const& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
      Matrix out(rows, cols);
      if (f.is_prime()) {
        std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = Rational(dist(rng));
          }
        }
      } else {
        std::uniform_int_distribution<int> dist(-3, 3);
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = Rational(dist(rng));
          }
        }
      }
      return out;
    }

    // A random rows x cols matrix of rank exactly r, or nullopt after many
    // unlucky draws.
    std::optional<Matrix> random_of_rank(Field const&     f,
                                         std::size_t      rows,
                                         std::size_t      cols,
                                         std::size_t      r,
                                         std::mt19937_64& rng) {
      if (r > std::min(rows, cols)) {
        return std::nullopt;
      }
      for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix x = linalg::multiply(f, random_matrix(f, rows, r, rng), random_matrix(f, r, cols, rng));
        if (linalg::rank(f, x) == r) {
          return x;
        }
      }
      return std::nullopt;
    }

    std::optional<Matrix> random_invertible(Field const& f, std::size_t n, std::mt19937_64& rng) {
      return random_of_rank(f, n, n, n, rng);
    }

  }  // namespace

  std::size_t hom_dim(Representation const& m, Representation const& n) {
    if (!(m.field() == n.field())) {
      throw ValidationError("hom_dim: representations over different fields");
    }
    if (!(m.presentation() == n.presentation())) {
      throw ValidationError("hom_dim: representations of different presentations");
    }
    Field const&  f = m.field();
    Quiver const& q = m.quiver();
    auto const&   dm = m.dimension();
    auto const&   dn = n.dimension();

    // phi_v is dn(v) x dm(v), stored row-major.
    std::vector<std::size_t> offset(q.num_vertices());
    std::size_t              total = 0;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      offset[v] = total;
      total += dn[v] * dm[v];
    }
    LinearSystem sys(f, total);
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      VertexId t = q.arrow(a).tail, h = q.arrow(a).head;
      // phi_h M(a) - N(a) phi_t, an dn(h) x dm(t) matrix.
      std::size_t row = sys.add_equations(dn[h] * dm[t]);
      add_sandwich(sys, f, row, Matrix::identity(dn[h]), offset[h], dm[h], m.matrix(a), Rational(1));
      add_sandwich(sys, f, row, n.matrix(a), offset[t], dm[t], Matrix::identity(dm[t]),
                   Rational(-1));
    }
    return sys.nullity();
  }

  std::size_t end_dim(Representation const& m) {
    return hom_dim(m, m);
  }

  std::size_t orbit_dim(Representation const& m) {
    require_valid(m);
    return gl_dimension(m.dimension()) - end_dim(m);
  }

  std::size_t tangent_dim(Representation const& m) {
    require_valid(m);
    Field const& f     = m.field();
    std::size_t  total = 0;
    auto         offsets = arrow_offsets(m, total);
    LinearSystem sys(f, total);
    auto const&  d = m.dimension();
    for (auto const& r : m.presentation().relations()) {
      if (auto const* z = std::get_if<ZeroPath>(&r)) {
        std::size_t row = sys.add_equations(d[z->path.target()] * d[z->path.source()]);
        add_path_derivative(sys, m, offsets, row, z->path, Rational(1));
      } else if (auto const* lc = std::get_if<LinearCombination>(&r)) {
        auto const& p0  = lc->terms.front().path;
        std::size_t row = sys.add_equations(d[p0.target()] * d[p0.source()]);
        for (auto const& t : lc->terms) {
          add_path_derivative(sys, m, offsets, row, t.path, f.normalize(t.coefficient));
        }
      } else {
        // X E + E X - X
        ArrowId       e   = std::get<IdempotentLoop>(r).loop;
        Matrix const& x   = m.matrix(e);
        std::size_t   n   = x.rows();
        std::size_t   row = sys.add_equations(n * n);
        add_sandwich(sys, f, row, Matrix::identity(n), offsets[e], n, x, Rational(1));
        add_sandwich(sys, f, row, x, offsets[e], n, Matrix::identity(n), Rational(1));
        add_sandwich(sys, f, row, Matrix::identity(n), offsets[e], n, Matrix::identity(n),
                     Rational(-1));
      }
    }
    return sys.nullity();
  }

  Matrix standard_idempotent(std::size_t n, std::size_t r) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < r && i < n; ++i) {
      out(i, i) = 1;
    }
    return out;
  }

  Representation idempotent_point(Field const& f, Matrix const& m) {
    if (m.rows() != m.cols()) {
      throw ValidationError("idempotent matrix must be square");
    }
    Quiver   q;
    VertexId v = q.add_vertex("1");
    ArrowId  e = q.add_arrow("e", v, v, true);
    auto     p = std::make_shared<Presentation const>(std::move(q),
                                                      std::vector<Relation>{IdempotentLoop{e}});
    return Representation(std::move(p), f, DimensionVector{m.rows()}, {m});
  }

  IdempotentComponent idempotent_component(Field const& f, Matrix const& m) {
    auto point = idempotent_point(f, m);
    if (!check_rep(point)) {
      throw ValidationError("matrix is not idempotent");
    }
    std::size_t r = linalg::rank(f, m);
    if (linalg::trace(f, m) != f.normalize(Rational(r))) {
      throw Error("internal: trace of an idempotent differs from its rank");
    }
    return {r, orbit_dim(point)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Rank sequences
  ////////////////////////////////////////////////////////////////////////

  bool rank_sequence_feasible(Presentation const& p, DimensionVector const& d, RankSequence const& r) {
    Quiver const& q = p.quiver();
    if (r.size() != q.num_arrows()) {
      return false;
    }
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      if (r[a] > std::min(d[q.arrow(a).tail], d[q.arrow(a).head])) {
        return false;
      }
    }
    for (auto const& z : p.zero_paths()) {
      if (z.length() != 2) {
        continue;
      }
      ArrowId a = z.arrows()[0], b = z.arrows()[1];
      if (r[a] + r[b] > d[q.arrow(a).head]) {
        return false;
      }
    }
    return true;
  }

  std::vector<RankSequence> maximal_rank_sequences(Presentation const& p, DimensionVector const& d) {
    auto verdict = is_gentle_pair(p);
    if (!verdict) {
      throw UnsupportedError("rank sequences need a gentle pair ("
                             + verdict.witnesses.front().clause + ": "
                             + verdict.witnesses.front().message + ")");
    }
    Quiver const& q = p.quiver();
    if (d.size() != q.num_vertices()) {
      throw ValidationError("dimension vector does not match the quiver");
    }
    std::size_t  n = q.num_arrows();
    RankSequence bound(n);
    for (ArrowId a = 0; a < n; ++a) {
      bound[a] = std::min(d[q.arrow(a).tail], d[q.arrow(a).head]);
    }

    std::vector<RankSequence> out;
    RankSequence              r(n, 0);
    while (true) {
      if (rank_sequence_feasible(p, d, r)) {
        bool maximal = true;
        for (ArrowId a = 0; a < n && maximal; ++a) {
          ++r[a];
          maximal = !rank_sequence_feasible(p, d, r);
          --r[a];
        }
        if (maximal) {
          out.push_back(r);
        }
      }
      std::size_t k = n;
      while (k > 0 && r[k - 1] == bound[k - 1]) {
        r[k - 1] = 0;
        --k;
      }
      if (k == 0) {
        break;
      }
      ++r[k - 1];
    }
    return out;
  }

  std::optional<Representation> attain_rank_sequence(std::shared_ptr<Presentation const> p,
                                                     Field const&                        f,
                                                     DimensionVector const&              d,
                                                     RankSequence const&                 r,
                                                     std::uint64_t                       seed) {
    if (!rank_sequence_feasible(*p, d, r)) {
      return std::nullopt;
    }
    Quiver const&   q = p->quiver();
    auto            zero = p->zero_paths();
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<Matrix> ms;
      std::vector<bool>   done(q.num_arrows(), false);
      bool                ok = true;
      for (auto const& a : q.arrows()) {
        ms.emplace_back(d[a.head], d[a.tail]);
      }
      for (ArrowId x = 0; x < q.num_arrows() && ok; ++x) {
        auto const& arrow = q.arrow(x);
        std::size_t dt = d[arrow.tail], dh = d[arrow.head];
        bool        square_zero = false;
        // Y X = 0 for assigned y after x; X Z = 0 for assigned z before x.
        Matrix after(0, dh), before(dt, 0);
        for (auto const& z : zero) {
          if (z.length() != 2) {
            continue;
          }
          ArrowId first = z.arrows()[0], second = z.arrows()[1];
          if (first == x && second == x) {
            square_zero = true;
          } else if (first == x && done[second]) {
            after = linalg::vconcat(after, ms[second]);
          } else if (second == x && done[first]) {
            before = linalg::hconcat(before, ms[first]);
          }
        }
        if (square_zero) {
          // Conjugate of r nilpotent Jordan blocks of size two.
          Matrix n(dh, dh);
          for (std::size_t i = 0; i < r[x]; ++i) {
            n(2 * i + 1, 2 * i) = 1;
          }
          auto g = random_invertible(f, dh, rng);
          if (!g) {
            ok = false;
            break;
          }
          ms[x] = linalg::multiply(f, *g, linalg::multiply(f, n, linalg::inverse(f, *g)));
        } else {
          Matrix cols = after.rows() == 0 ? Matrix::identity(dh) : linalg::nullspace(f, after);
          Matrix rows = before.cols() == 0 ? Matrix::identity(dt)
                                           : linalg::nullspace(f, before.transpose()).transpose();
          auto core = random_of_rank(f, cols.cols(), rows.rows(), r[x], rng);
          if (!core) {
            ok = false;
            break;
          }
          ms[x] = linalg::multiply(f, cols, linalg::multiply(f, *core, rows));
        }
        done[x] = true;
      }
      if (!ok) {
        continue;
      }
      Representation m(p, f, d, std::move(ms));
      bool           exact = static_cast<bool>(check_rep(m));
      for (ArrowId x = 0; x < q.num_arrows() && exact; ++x) {
        exact = linalg::rank(f, m.matrix(x)) == r[x];
      }
      if (exact) {
        return m;
      }
    }
    return std::nullopt;
  }

  std::size_t component_dim(Representation const& m, std::size_t band_families) {
    return orbit_dim(m) + band_families;
  }

}  // namespace quivertk
