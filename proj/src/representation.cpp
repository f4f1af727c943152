#include "quivertk/representation.hpp"

#include <map>
#include <sstream>

#include "quivertk/errors.hpp"

namespace quivertk {

  Representation::Representation(std::shared_ptr<Presentation const> presentation,
                                 Field                               field,
                                 DimensionVector                     dim,
                                 std::vector<Matrix>                 matrices)
      : _presentation(std::move(presentation)),
        _field(field),
        _dim(std::move(dim)),
        _matrices(std::move(matrices)) {
    Quiver const& q = _presentation->quiver();
    if (_dim.size() != q.num_vertices()) {
      throw ValidationError("dimension vector has " + std::to_string(_dim.size())
                            + " entries, quiver has " + std::to_string(q.num_vertices())
                            + " vertices");
    }
    if (_matrices.size() != q.num_arrows()) {
      throw ValidationError("expected " + std::to_string(q.num_arrows()) + " matrices, got "
                            + std::to_string(_matrices.size()));
    }
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto const& arrow = q.arrow(a);
      auto&       m     = _matrices[a];
      if (m.rows() != _dim[arrow.head] || m.cols() != _dim[arrow.tail]) {
        throw ValidationError("matrix of arrow '" + arrow.name + "' is " + std::to_string(m.rows())
                              + "x" + std::to_string(m.cols()) + ", expected "
                              + std::to_string(_dim[arrow.head]) + "x"
                              + std::to_string(_dim[arrow.tail]));
      }
      m = linalg::normalize(_field, std::move(m));
    }
  }

  Representation Representation::zero(std::shared_ptr<Presentation const> presentation,
                                       Field                               field,
                                       DimensionVector                     dim) {
    Quiver const&       q = presentation->quiver();
    std::vector<Matrix> ms;
    for (auto const& a : q.arrows()) {
      ms.emplace_back(dim.values.at(a.head), dim.values.at(a.tail));
    }
    return Representation(std::move(presentation), field, std::move(dim), std::move(ms));
  }

  Representation Representation::with_matrix(ArrowId a, Matrix m) const {
    auto ms = _matrices;
    ms.at(a) = std::move(m);
    return Representation(_presentation, _field, _dim, std::move(ms));
  }

  bool operator==(Representation const& x, Representation const& y) {
    return *x._presentation == *y._presentation && x._field == y._field && x._dim == y._dim
           && x._matrices == y._matrices;
  }

  Matrix evaluate(Representation const& m, Path const& path) {
    Matrix out = Matrix::identity(m.dimension()[path.source()]);
    for (ArrowId a : path.arrows()) {
      out = linalg::multiply(m.field(), m.matrix(a), out);
    }
    return out;
  }

  Matrix evaluate(Representation const& m, Relation const& r) {
    Field const& f = m.field();
    if (auto const* z = std::get_if<ZeroPath>(&r)) {
      return evaluate(m, z->path);
    }
    if (auto const* lc = std::get_if<LinearCombination>(&r)) {
      auto const& first = lc->terms.front().path;
      Matrix      out(m.dimension()[first.target()], m.dimension()[first.source()]);
      for (auto const& t : lc->terms) {
        out = linalg::add(f, out, linalg::scale(f, t.coefficient, evaluate(m, t.path)));
      }
      return out;
    }
    ArrowId       e = std::get<IdempotentLoop>(r).loop;
    Matrix const& x = m.matrix(e);
    return linalg::subtract(f, linalg::multiply(f, x, x), x);
  }

  RepCheck check_rep(Representation const& m) {
    auto const& rels = m.presentation().relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!evaluate(m, rels[i]).is_zero()) {
        return {false, i, "relation " + relation_expression(m.quiver(), rels[i]) + " does not vanish"};
      }
    }
    return {};
  }

  void require_valid(Representation const& m) {
    auto check = check_rep(m);
    if (!check) {
      throw ValidationError(check.message);
    }
  }

  Representation change_field(Representation const& m, Field const& f) {
    if (!(m.field() == f) && m.field().is_prime()) {
      throw ValidationError("cannot move a representation over " + m.field().name() + " to "
                            + f.name());
    }
    return Representation(m.presentation_ptr(), f, m.dimension(), m.matrices());
  }

  Representation direct_sum(Representation const& m, Representation const& n) {
    if (!(m.presentation() == n.presentation())) {
      throw ValidationError("direct sum of representations of different presentations");
    }
    if (!(m.field() == n.field())) {
      throw ValidationError("direct sum of representations over different fields");
    }
    Quiver const&   q = m.quiver();
    DimensionVector d = m.dimension();
    for (std::size_t v = 0; v < d.size(); ++v) {
      d[v] += n.dimension()[v];
    }
    std::vector<Matrix> ms;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto const& x = m.matrix(a);
      auto const& y = n.matrix(a);
      Matrix      s(x.rows() + y.rows(), x.cols() + y.cols());
      s.set_block(0, 0, x);
      s.set_block(x.rows(), x.cols(), y);
      ms.push_back(std::move(s));
    }
    return Representation(m.presentation_ptr(), m.field(), std::move(d), std::move(ms));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> words;
    };

    std::vector<Line> significant_lines(std::string const& text) {
      std::vector<Line>  out;
      std::istringstream in(text);
      std::string        raw;
      std::size_t        n = 0;
      while (std::getline(in, raw)) {
        ++n;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream       words(raw);
        std::vector<std::string> w;
        for (std::string s; words >> s;) {
          w.push_back(s);
        }
        if (!w.empty()) {
          out.push_back({n, std::move(w)});
        }
      }
      return out;
    }

    std::size_t parse_count(std::string const& s, std::size_t line) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a nonnegative integer, got '" + s + "'", line, 1);
      }
      return std::stoul(s);
    }

  }  // namespace

  std::string representation_name(std::string const& text) {
    auto lines = significant_lines(text);
    if (lines.empty() || lines[0].words.size() < 2 || lines[0].words[0] != "rep") {
      return "";
    }
    return lines[0].words[1];
  }

  Representation parse_representation(std::string const&                  text,
                                      std::shared_ptr<Presentation const> presentation,
                                      std::uint32_t                       fallback_prime) {
    Quiver const& q     = presentation->quiver();
    auto          lines = significant_lines(text);
    if (lines.empty()) {
      throw ParseError("empty representation file", 1, 1);
    }
    auto const& header = lines[0];
    if (header.words.size() != 4 || header.words[0] != "rep" || header.words[2] != "over") {
      throw ParseError("expected 'rep <name> over Q|F<p>'", header.number, 1);
    }
    Field field;
    try {
      field = Field::from_name(header.words[3], fallback_prime);
    } catch (Error const& e) {
      throw ParseError(e.what(), header.number, 1);
    }

    if (lines.size() < 2 || lines[1].words[0] != "dim") {
      throw ParseError("expected a 'dim' line", lines.size() < 2 ? header.number + 1 : lines[1].number,
                       1);
    }
    DimensionVector d(std::vector<std::size_t>(q.num_vertices(), 0));
    std::vector<bool> seen(q.num_vertices(), false);
    for (std::size_t i = 1; i < lines[1].words.size(); ++i) {
      auto const& w  = lines[1].words[i];
      auto        eq = w.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected <vertex>=<dimension>, got '" + w + "'", lines[1].number, 1);
      }
      auto v = q.find_vertex(w.substr(0, eq));
      if (!v) {
        throw ParseError("unknown vertex '" + w.substr(0, eq) + "'", lines[1].number, 1);
      }
      if (seen[*v]) {
        throw ParseError("vertex '" + w.substr(0, eq) + "' listed twice", lines[1].number, 1);
      }
      seen[*v] = true;
      d[*v]    = parse_count(w.substr(eq + 1), lines[1].number);
    }
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      if (!seen[v]) {
        throw ParseError("no dimension given for vertex '" + q.vertex_name(v) + "'",
                         lines[1].number, 1);
      }
    }

    std::vector<Matrix> ms;
    for (auto const& a : q.arrows()) {
      ms.emplace_back(d[a.head], d[a.tail]);
    }
    std::vector<bool> given(q.num_arrows(), false);
    std::size_t       i = 2;
    while (i < lines.size()) {
      auto const& l = lines[i];
      if (l.words.size() != 4 || l.words[0] != "mat") {
        throw ParseError("expected 'mat <arrow> <rows> <cols>'", l.number, 1);
      }
      auto a = q.find_arrow(l.words[1]);
      if (!a) {
        throw ParseError("unknown arrow '" + l.words[1] + "'", l.number, 1);
      }
      if (given[*a]) {
        throw ParseError("arrow '" + l.words[1] + "' given twice", l.number, 1);
      }
      given[*a]        = true;
      std::size_t rows = parse_count(l.words[2], l.number);
      std::size_t cols = parse_count(l.words[3], l.number);
      if (rows != ms[*a].rows() || cols != ms[*a].cols()) {
        throw ParseError("matrix of '" + l.words[1] + "' must be "
                             + std::to_string(ms[*a].rows()) + "x"
                             + std::to_string(ms[*a].cols()),
                         l.number, 1);
      }
      ++i;
      // A matrix with no columns still has `rows` (empty) rows; none are
      // written, so nothing is read.
      std::size_t to_read = cols == 0 ? 0 : rows;
      for (std::size_t r = 0; r < to_read; ++r, ++i) {
        if (i >= lines.size()) {
          throw ParseError("matrix of '" + l.words[1] + "' is missing rows", l.number, 1);
        }
        auto const& row = lines[i];
        if (row.words.size() != cols) {
          throw ParseError("expected " + std::to_string(cols) + " entries", row.number, 1);
        }
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            ms[*a](r, c) = parse_rational(row.words[c]);
          } catch (Error const& e) {
            throw ParseError(e.what(), row.number, 1);
          }
        }
      }
    }
    try {
      return Representation(std::move(presentation), field, std::move(d), std::move(ms));
    } catch (ValidationError const& e) {
      throw ParseError(e.what(), header.number, 1);
    }
  }

  std::string serialize_representation(Representation const& m, std::string const& name) {
    Quiver const&      q = m.quiver();
    std::ostringstream out;
    out << "rep " << name << " over " << m.field().name() << "\n";
    out << "dim";
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      out << " " << q.vertex_name(v) << "=" << m.dimension()[v];
    }
    out << "\n";
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto const& x = m.matrix(a);
      out << "mat " << q.arrow(a).name << " " << x.rows() << " " << x.cols() << "\n";
      if (x.cols() == 0) {
        continue;
      }
      for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
          out << (c ? " " : "") << to_string(x(r, c));
        }
        out << "\n";
      }
    }
    return out.str();
  }

}  // namespace quivertk
