#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quivertk/classify.hpp"
#include "quivertk/dsl.hpp"
#include "quivertk/errors.hpp"
#include "quivertk/repvar.hpp"
#include "quivertk/rho_blocks.hpp"
#include "quivertk/split.hpp"
#include "quivertk/stability.hpp"
#include "quivertk/strings_bands.hpp"

namespace py = pybind11;
using namespace quivertk;

namespace {

  // pybind11 holders cannot point to const; the library never mutates a
  // presentation once built.
  using PresentationPtr = std::shared_ptr<Presentation>;

  PresentationPtr parse(std::string const& text) {
    return std::make_shared<Presentation>(parse_presentation(text));
  }

  PresentationPtr unconst(std::shared_ptr<Presentation const> p) {
    return std::const_pointer_cast<Presentation>(std::move(p));
  }

  py::dict verdict_dict(Verdict const& v) {
    py::list ws;
    for (auto const& w : v.witnesses) {
      py::dict d;
      d["clause"]  = w.clause;
      d["kind"]    = to_string(w.kind);
      d["message"] = w.message;
      ws.append(d);
    }
    py::dict out;
    out["holds"]     = v.holds;
    out["witnesses"] = ws;
    return out;
  }

  std::vector<std::string> words(Presentation const& p, std::vector<Word> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(to_string(p.quiver(), w));
    }
    return out;
  }

  Matrix matrix_from_rows(std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::vector<Rational>> rs;
    for (auto const& row : rows) {
      rs.emplace_back();
      for (auto const& x : row) {
        rs.back().push_back(parse_rational(x));
      }
    }
    return Matrix::from_rows(rs);
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with bound quiver algebras";

  auto base = py::register_exception<Error>(m, "QuiverError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<GuardError>(m, "GuardError", base.ptr());

  py::class_<Presentation, PresentationPtr>(m, "Presentation")
      .def(py::init(&parse), py::arg("text"))
      .def("__str__", [](Presentation const& p) { return serialize_presentation(p); })
      .def("__eq__", [](Presentation const& x, Presentation const& y) { return x == y; })
      .def_property_readonly("vertices", [](Presentation const& p) { return p.quiver().vertices(); })
      .def_property_readonly("arrows",
                             [](Presentation const& p) {
                               std::vector<std::string> out;
                               for (auto const& a : p.quiver().arrows()) {
                                 out.push_back(a.name);
                               }
                               return out;
                             })
      .def_property_readonly("relations", [](Presentation const& p) {
        std::vector<std::string> out;
        for (auto const& r : p.relations()) {
          out.push_back(to_string(p.quiver(), r));
        }
        return out;
      });

  py::class_<Representation>(m, "Representation")
      .def(py::init([](PresentationPtr p, std::string const& text) { return parse_representation(text, p); }),
           py::arg("presentation"), py::arg("text"))
      .def("__str__", [](Representation const& r) { return serialize_representation(r); })
      .def("__eq__", [](Representation const& x, Representation const& y) { return x == y; })
      .def_property_readonly("dimension", [](Representation const& r) { return r.dimension().values; })
      .def_property_readonly("field", [](Representation const& r) { return r.field().name(); })
      .def("matrix", [](Representation const& r, std::string const& arrow) {
        auto const&                           mat = r.matrix(r.quiver().arrow_id(arrow));
        std::vector<std::vector<std::string>> out(mat.rows());
        for (std::size_t i = 0; i < mat.rows(); ++i) {
          for (std::size_t j = 0; j < mat.cols(); ++j) {
            out[i].push_back(to_string(mat(i, j)));
          }
        }
        return out;
      });

  m.def("classify", [](Presentation const& p) {
    auto     r = classify(p);
    py::dict out;
    out["gentle"]             = verdict_dict(r.gentle_pair);
    out["special-biserial"]   = verdict_dict(r.special_biserial);
    out["skewed-gentle"]      = verdict_dict(r.skewed_gentle);
    out["clannish"]           = verdict_dict(r.clannish);
    out["finite-dimensional"] = verdict_dict(r.finite_dimensional);
    return out;
  });

  m.def("split", [](Presentation const& p) { return unconst(split_presentation(p).presentation); });
  m.def("split_rep", [](Representation const& r) { return split_rep(r, split_presentation(r.presentation())); });
  m.def("envelope", [](Presentation const& p) { return std::make_shared<Presentation>(skewed_gentle_envelope(p)); });

  m.def("rho_blocks", [](Presentation const& p) {
    std::vector<std::vector<std::string>> out;
    for (auto const& b : rho_blocks(p).blocks) {
      out.emplace_back();
      for (ArrowId a : b.arrows) {
        out.back().push_back(p.quiver().arrow(a).name);
      }
    }
    return out;
  });

  m.def("strings", [](Presentation const& p, std::size_t max_length) { return words(p, enumerate_strings(p, max_length)); },
        py::arg("presentation"), py::arg("max_length"));
  m.def("bands", [](Presentation const& p, std::size_t max_length) { return words(p, enumerate_bands(p, max_length)); },
        py::arg("presentation"), py::arg("max_length"));
  m.def(
      "string_module",
      [](PresentationPtr p, std::string const& word, std::string const& field) {
        return string_module(p, Field::from_name(field), parse_word(p->quiver(), word));
      },
      py::arg("presentation"), py::arg("word"), py::arg("field") = "Q");
  m.def(
      "band_module",
      [](PresentationPtr p, std::string const& word, std::string const& lambda, std::string const& field) {
        return band_module(p, Field::from_name(field), parse_word(p->quiver(), word), parse_rational(lambda));
      },
      py::arg("presentation"), py::arg("word"), py::arg("lam") = "1", py::arg("field") = "Q");

  m.def("check", [](Representation const& r) { return check_rep(r).valid; });
  m.def("hom_dim", &hom_dim);
  m.def("end_dim", &end_dim);
  m.def("orbit_dim", &orbit_dim);
  m.def("tangent_dim", &tangent_dim);
  m.def("component_dim", &component_dim, py::arg("rep"), py::arg("band_families"));

  m.def(
      "idempotent_component",
      [](std::vector<std::vector<std::string>> const& rows, std::string const& field) {
        auto c = idempotent_component(Field::from_name(field), matrix_from_rows(rows));
        return std::make_pair(c.rank, c.dimension);
      },
      py::arg("matrix"), py::arg("field") = "Q");

  m.def("maximal_rank_sequences", [](Presentation const& p, std::vector<std::size_t> const& d) {
    return maximal_rank_sequences(p, DimensionVector(d));
  });

  m.def(
      "stability",
      [](Representation const& r, std::vector<long long> const& theta, std::size_t max_total_dim) {
        StabilityGuard g;
        g.max_total_dim = max_total_dim;
        auto     v      = check_stability(r, Weight(theta), g);
        py::dict out;
        out["verdict"] = to_string(v.stability);
        out["total"]   = v.total;
        if (v.certificate) {
          out["certificate"]       = v.certificate->dim.values;
          out["certificate_value"] = v.certificate_value;
        } else {
          out["certificate"] = py::none();
        }
        return out;
      },
      py::arg("rep"), py::arg("theta"), py::arg("max_total_dim") = 8);

  m.def(
      "moduli_shape",
      [](std::vector<std::pair<std::size_t, int>> const& factors, bool clannish) {
        StableDecompositionInput in;
        in.clannish = clannish;
        std::size_t k = 0;
        for (auto [mult, c] : factors) {
          in.factors.push_back({"factor" + std::to_string(k++), mult, c, true});
        }
        return to_string(moduli_shape(in));
      },
      py::arg("factors"), py::arg("clannish"));
}
