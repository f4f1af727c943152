#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quivertk/classify.hpp"
#include "quivertk/dsl.hpp"
#include "quivertk/errors.hpp"
#include "quivertk/repvar.hpp"
#include "quivertk/rho_blocks.hpp"
#include "quivertk/split.hpp"
#include "quivertk/stability.hpp"
#include "quivertk/strings_bands.hpp"

namespace quivertk::cli {

  namespace {

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot open '" + path + "'");
      }
      std::ostringstream out;
      out << in.rdbuf();
      return out.str();
    }

    std::shared_ptr<Presentation const> load_presentation(std::string const& path) {
      try {
        return std::make_shared<Presentation const>(parse_presentation(read_file(path)));
      } catch (ParseError const& e) {
        throw Error(path + ": " + e.what());
      }
    }

    Representation load_rep(std::shared_ptr<Presentation const> p,
                            std::string const&                  path,
                            std::uint32_t                       fallback_prime = 0) {
      try {
        return parse_representation(read_file(path), std::move(p), fallback_prime);
      } catch (ParseError const& e) {
        throw Error(path + ": " + e.what());
      }
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    Json names(Quiver const& q, std::vector<ArrowId> const& arrows) {
      Json out = Json::array();
      for (ArrowId a : arrows) {
        out.push_back(q.arrow(a).name);
      }
      return out;
    }

    Json dims(DimensionVector const& d) {
      Json out = Json::array();
      for (auto x : d.values) {
        out.push_back(x);
      }
      return out;
    }

    Json matrix_json(Matrix const& m) {
      Json out = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
          row.push_back(to_string(m(i, j)));
        }
        out.push_back(row);
      }
      return out;
    }

    void add_warnings(Presentation const& p, Report& r) {
      Json w = Json::array();
      for (auto const& msg : p.warnings()) {
        r.text += "warning: " + msg + "\n";
        w.push_back(msg);
      }
      r.json["warnings"] = w;
    }

  }  // namespace

  Report classify(std::string const& path, std::optional<std::string> const& cls) {
    auto        p = load_presentation(path);
    Report      r;
    add_warnings(*p, r);
    auto        report = quivertk::classify(*p);
    std::shared_ptr<Presentation const> split;

    std::pair<char const*, Verdict const*> rows[] = {
        {"gentle", &report.gentle_pair},
        {"special-biserial", &report.special_biserial},
        {"skewed-gentle", &report.skewed_gentle},
        {"clannish", &report.clannish},
        {"finite-dimensional", &report.finite_dimensional},
    };
    bool found = !cls.has_value();
    for (auto const& [label, v] : rows) {
      r.text += std::string(label) + ": " + yes_no(v->holds) + "\n";
      Json entry       = Json::object();
      entry["holds"]   = v->holds;
      Json witnesses   = Json::array();
      for (auto const& w : v->witnesses) {
        Quiver const* q = &p->quiver();
        if (w.on_split_presentation) {
          if (!split) {
            split = split_relation_shapes(*p).presentation;
          }
          q = &split->quiver();
        }
        r.text += "  [" + w.clause + "] " + w.message + "\n";
        Json j        = Json::object();
        j["clause"]   = w.clause;
        j["kind"]     = to_string(w.kind);
        j["message"]  = w.message;
        Json vs       = Json::array();
        for (VertexId v2 : w.vertices) {
          vs.push_back(q->vertex_name(v2));
        }
        j["vertices"] = vs;
        j["arrows"]   = names(*q, w.arrows);
        j["relation"] = w.relation ? Json(*w.relation) : Json(nullptr);
        j["on_split_presentation"] = w.on_split_presentation;
        witnesses.push_back(j);
      }
      entry["witnesses"] = witnesses;
      r.json[label]      = entry;
      if (cls && *cls == label) {
        found       = true;
        r.exit_code = v->holds ? 0 : 1;
      }
    }
    if (!found) {
      throw Error("unknown class '" + *cls
                  + "' (gentle, special-biserial, skewed-gentle, clannish, finite-dimensional)");
    }
    return r;
  }

  Report split(std::string const& path, std::optional<std::string> const& rep) {
    auto   p = load_presentation(path);
    auto   s = split_presentation(*p);
    Report r;
    if (rep) {
      auto m   = load_rep(p, *rep);
      auto out = split_rep(m, s);
      r.text   = serialize_representation(out, representation_name(read_file(*rep)));
      r.json["field"]     = out.field().name();
      r.json["dimension"] = dims(out.dimension());
      Json ms             = Json::object();
      for (ArrowId a = 0; a < out.quiver().num_arrows(); ++a) {
        ms[out.quiver().arrow(a).name] = matrix_json(out.matrix(a));
      }
      r.json["matrices"] = ms;
      return r;
    }
    r.text = serialize_presentation(*s.presentation);
    r.text += "\n# split map\n";
    std::istringstream table(split_map_table(*p, s));
    for (std::string line; std::getline(table, line);) {
      r.text += "# " + line + "\n";
    }
    r.json["presentation"] = serialize_presentation(*s.presentation);
    Json vmap              = Json::object();
    Quiver const& q        = p->quiver();
    Quiver const& sq       = s.presentation->quiver();
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      Json img = Json::array();
      for (VertexId w : s.map.vertex_map[v]) {
        img.push_back(sq.vertex_name(w));
      }
      vmap[q.vertex_name(v)] = img;
    }
    Json amap = Json::object();
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      amap[q.arrow(a).name] = names(sq, s.map.arrow_map[a]);
    }
    r.json["vertex_map"] = vmap;
    r.json["arrow_map"]  = amap;
    return r;
  }

  Report envelope(std::string const& path) {
    auto   p   = load_presentation(path);
    auto   env = skewed_gentle_envelope(*p);
    Report r;
    r.text                 = serialize_presentation(env);
    r.json["presentation"] = r.text;
    return r;
  }

  Report blocks(std::string const& path) {
    auto          p   = load_presentation(path);
    auto          dec = rho_blocks(*p);
    Quiver const& q   = p->quiver();
    Report        r;
    Json          list = Json::array();
    for (std::size_t k = 0; k < dec.blocks.size(); ++k) {
      auto const& b = dec.blocks[k];
      std::string arrows, vertices;
      Json        vs = Json::array();
      for (ArrowId a : b.arrows) {
        arrows += (arrows.empty() ? "" : ", ") + q.arrow(a).name;
      }
      for (VertexId v : b.vertices) {
        vertices += (vertices.empty() ? "" : ", ") + q.vertex_name(v);
        vs.push_back(q.vertex_name(v));
      }
      r.text += "block " + std::to_string(k) + ": arrows {" + arrows + "} vertices {" + vertices
                + "} relations " + std::to_string(b.relations.size()) + "\n";
      Json j         = Json::object();
      j["arrows"]    = names(q, b.arrows);
      j["vertices"]  = vs;
      j["relations"] = b.relations.size();
      list.push_back(j);
    }
    Json iso = Json::array();
    if (!dec.isolated_vertices.empty()) {
      std::string line;
      for (VertexId v : dec.isolated_vertices) {
        line += (line.empty() ? "" : ", ") + q.vertex_name(v);
        iso.push_back(q.vertex_name(v));
      }
      r.text += "isolated vertices {" + line + "}\n";
    }
    r.json["blocks"]            = list;
    r.json["isolated_vertices"] = iso;
    return r;
  }

  namespace {

    Report module_report(Representation const& m, std::string const& name) {
      Report r;
      r.text              = serialize_representation(m, name);
      r.json["field"]     = m.field().name();
      r.json["dimension"] = dims(m.dimension());
      Json ms             = Json::object();
      for (ArrowId a = 0; a < m.quiver().num_arrows(); ++a) {
        ms[m.quiver().arrow(a).name] = matrix_json(m.matrix(a));
      }
      r.json["matrices"] = ms;
      return r;
    }

    Report word_list(Quiver const& q, std::vector<Word> const& words, bool band, char const* key) {
      Report r;
      Json   list = Json::array();
      for (auto const& w : words) {
        auto d = word_dimension_vector(q, w, band);
        r.text += to_string(q, w) + "  " + to_string(d) + "\n";
        Json j         = Json::object();
        j["word"]      = to_string(q, w);
        j["length"]    = w.length();
        j["dimension"] = dims(d);
        list.push_back(j);
      }
      r.json[key] = list;
      return r;
    }

  }  // namespace

  Report strings(std::string const&                path,
                 std::size_t                       max_length,
                 std::optional<std::string> const& module,
                 std::string const&                field) {
    auto p = load_presentation(path);
    if (module) {
      Field f = Field::from_name(field);
      auto  w = parse_word(p->quiver(), *module);
      return module_report(string_module(p, f, w), "string");
    }
    return word_list(p->quiver(), enumerate_strings(*p, max_length), false, "strings");
  }

  Report bands(std::string const&                path,
               std::size_t                       max_length,
               std::optional<std::string> const& module,
               std::string const&                lambda,
               std::string const&                field) {
    auto p = load_presentation(path);
    if (module) {
      Field f = Field::from_name(field);
      auto  w = parse_word(p->quiver(), *module);
      return module_report(band_module(p, f, w, parse_rational(lambda)), "band");
    }
    return word_list(p->quiver(), enumerate_bands(*p, max_length), true, "bands");
  }

  Report check(std::string const& path, std::string const& rep) {
    auto   p     = load_presentation(path);
    auto   m     = load_rep(p, rep);
    auto   valid = check_rep(m);
    Report r;
    r.text          = valid ? "valid\n" : "invalid: " + valid.message + "\n";
    r.json["valid"] = valid.valid;
    r.json["violated_relation"] = valid.violated ? Json(*valid.violated) : Json(nullptr);
    r.json["message"]           = valid.message;
    r.exit_code                 = valid ? 0 : 1;
    return r;
  }

  Report homdim(std::string const& path, std::string const& rep1, std::string const& rep2) {
    auto        p = load_presentation(path);
    auto        m = load_rep(p, rep1);
    auto        n = load_rep(p, rep2);
    std::size_t h = hom_dim(m, n);
    Report      r;
    r.text            = "hom_dim " + std::to_string(h) + "\n";
    r.json["hom_dim"] = h;
    return r;
  }

  Report orbitdim(std::string const& path, std::string const& rep) {
    auto        p  = load_presentation(path);
    auto        m  = load_rep(p, rep);
    std::size_t od = orbit_dim(m);
    std::size_t gl = gl_dimension(m.dimension());
    Report      r;
    r.text = "dim GL(d) " + std::to_string(gl) + "\ndim End " + std::to_string(gl - od)
             + "\norbit_dim " + std::to_string(od) + "\n";
    r.json["gl_dim"]    = gl;
    r.json["end_dim"]   = gl - od;
    r.json["orbit_dim"] = od;
    return r;
  }

  Report tangent(std::string const& path, std::string const& rep) {
    auto        p = load_presentation(path);
    auto        m = load_rep(p, rep);
    std::size_t t = tangent_dim(m);
    Report      r;
    r.text                = "tangent_dim " + std::to_string(t) + "\n";
    r.json["tangent_dim"] = t;
    return r;
  }

  Report ranks(std::string const& path,
               std::string const& dim,
               bool               attain,
               std::uint64_t      seed,
               std::string const& field) {
    auto          p    = load_presentation(path);
    Quiver const& q    = p->quiver();
    auto          d    = parse_dimension_vector(q, dim);
    auto          seqs = maximal_rank_sequences(*p, d);
    Field         f    = Field::from_name(field);
    Report        r;
    Json          list = Json::array();
    bool          all  = true;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      std::string line;
      Json        j = Json::object();
      Json        rk = Json::object();
      for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        line += (a ? " " : "") + q.arrow(a).name + "=" + std::to_string(seqs[i][a]);
        rk[q.arrow(a).name] = seqs[i][a];
      }
      j["ranks"] = rk;
      if (attain) {
        auto m = attain_rank_sequence(p, f, d, seqs[i], seed + i);
        line += m ? "  attained" : "  not attained";
        j["attained"] = m.has_value();
        if (m) {
          j["orbit_dim"] = orbit_dim(*m);
        }
        all = all && m.has_value();
      }
      r.text += line + "\n";
      list.push_back(j);
    }
    r.json["dimension"] = dims(d);
    r.json["maximal_rank_sequences"] = list;
    r.exit_code                      = all ? 0 : 1;
    return r;
  }

  Report idem(std::string const& path, std::string const& field) {
    Field                              f = Field::from_name(field);
    std::istringstream                 in(read_file(path));
    std::vector<std::vector<Rational>> rows;
    std::size_t                        line = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++line;
      auto hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream    words(raw);
      std::vector<Rational> row;
      for (std::string s; words >> s;) {
        try {
          row.push_back(parse_rational(s));
        } catch (Error const& e) {
          throw Error(path + ": line " + std::to_string(line) + ": " + e.what());
        }
      }
      if (!row.empty()) {
        if (!rows.empty() && row.size() != rows.front().size()) {
          throw Error(path + ": line " + std::to_string(line) + ": rows of different lengths");
        }
        rows.push_back(std::move(row));
      }
    }
    Matrix m = rows.empty() ? Matrix() : Matrix::from_rows(rows);
    auto   c = idempotent_component(f, m);
    auto   t = tangent_dim(idempotent_point(f, m));
    Report r;
    r.text = "size " + std::to_string(m.rows()) + "\nrank " + std::to_string(c.rank)
             + "\ncomponent_dim " + std::to_string(c.dimension) + "\ntangent_dim "
             + std::to_string(t) + "\n";
    r.json["size"]          = m.rows();
    r.json["rank"]          = c.rank;
    r.json["component_dim"] = c.dimension;
    r.json["tangent_dim"]   = t;
    return r;
  }

  Report stability(std::string const& path,
                   std::string const& rep,
                   std::string const& weight,
                   std::uint32_t      prime,
                   std::size_t        max_total_dim) {
    auto  p     = load_presentation(path);
    Field f     = Field::prime(prime);
    auto  m     = change_field(load_rep(p, rep, prime), f);
    auto  theta = parse_weight(p->quiver(), weight);
    StabilityGuard guard;
    guard.max_total_dim = max_total_dim;
    auto   v = check_stability(m, theta, guard);
    Report r;
    r.text = "verdict " + to_string(v.stability) + "\ntheta(d) " + std::to_string(v.total) + "\n";
    r.json["verdict"] = to_string(v.stability);
    r.json["field"]   = f.name();
    r.json["theta_d"] = v.total;
    if (v.certificate) {
      Quiver const& q = p->quiver();
      r.text += "certificate " + to_string(v.certificate->dim) + " theta "
                + std::to_string(v.certificate_value) + "\n";
      Json bases = Json::object();
      for (VertexId x = 0; x < q.num_vertices(); ++x) {
        auto const& b = v.certificate->bases[x];
        r.text += "  basis " + q.vertex_name(x) + ":";
        for (std::size_t c = 0; c < b.cols(); ++c) {
          r.text += " (";
          for (std::size_t i = 0; i < b.rows(); ++i) {
            r.text += (i ? "," : "") + to_string(b(i, c));
          }
          r.text += ")";
        }
        r.text += "\n";
        bases[q.vertex_name(x)] = matrix_json(b.transpose());
      }
      r.json["certificate"] = {{"dimension", dims(v.certificate->dim)},
                               {"theta", v.certificate_value},
                               {"bases", bases}};
    } else {
      r.json["certificate"] = nullptr;
    }
    r.exit_code = v.stability == Stability::unstable ? 1 : 0;
    return r;
  }

  Report moduli(std::string const& path) {
    auto dec = parse_decomposition(read_file(path));
    if (dec.presentation_path) {
      std::filesystem::path pres(*dec.presentation_path);
      if (pres.is_relative()) {
        pres = std::filesystem::path(path).parent_path() / pres;
      }
      auto verdict = is_clannish(*load_presentation(pres.string()));
      if (!verdict) {
        throw UnsupportedError("presentation '" + *dec.presentation_path + "' is not clannish");
      }
      dec.input.clannish = true;
    } else {
      dec.input.clannish = dec.clannish_asserted;
    }
    auto   shape = moduli_shape(dec.input);
    Report r;
    r.text = to_string(shape) + "\n";
    Json ex = Json::array();
    for (auto e : shape.exponents) {
      ex.push_back(e);
    }
    r.json["shape"]     = to_string(shape);
    r.json["exponents"] = ex;
    r.json["dimension"] = shape.dimension();
    return r;
  }

}  // namespace quivertk::cli
