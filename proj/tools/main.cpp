// quivertk command-line front end.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "quivertk/errors.hpp"

namespace cli = quivertk::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with bound quiver algebras"};
  app.require_subcommand(1);
  bool json = false;

  auto add = [&](char const* name, char const* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "Print the report as JSON");
    return sub;
  };

  std::string quiver, rep, rep2, file, dim, weight, field = "Q", lambda = "1";
  std::optional<std::string> cls, module, split_rep;
  std::size_t                max_length    = 4;
  std::size_t                max_total_dim = 8;
  std::uint32_t              prime         = 2;
  std::uint64_t              seed          = 0;
  bool                       attain        = false;
  cli::Report                report;

  auto* classify = add("classify", "Decide the algebra classes of a presentation");
  classify->add_option("quiver", quiver, "Presentation file")->required();
  classify->add_option("--class", cls,
                       "Exit 0 iff this class holds (gentle, special-biserial, skewed-gentle, "
                       "clannish, finite-dimensional)");

  auto* split = add("split", "Admissible presentation of a clannish presentation");
  split->add_option("quiver", quiver, "Presentation file")->required();
  split->add_option("--rep", split_rep, "Transport this representation instead");

  auto* envelope = add("envelope", "Skewed-gentle envelope of a clannish presentation");
  envelope->add_option("quiver", quiver, "Presentation file")->required();

  auto* blocks = add("blocks", "Arrow classes linked by relations");
  blocks->add_option("quiver", quiver, "Presentation file")->required();

  auto* strings = add("strings", "Enumerate strings, or build a string module");
  strings->add_option("quiver", quiver, "Presentation file")->required();
  strings->add_option("--max-length", max_length, "Longest word")->capture_default_str();
  strings->add_option("--module", module, "Print the module of this word");
  strings->add_option("--field", field, "Q or F<p>")->capture_default_str();

  auto* bands = add("bands", "Enumerate bands, or build a band module");
  bands->add_option("quiver", quiver, "Presentation file")->required();
  bands->add_option("--max-length", max_length, "Longest word")->capture_default_str();
  bands->add_option("--module", module, "Print the module of this word");
  bands->add_option("--lambda", lambda, "Band parameter")->capture_default_str();
  bands->add_option("--field", field, "Q or F<p>")->capture_default_str();

  auto* check = add("check", "Check that a representation satisfies the relations");
  check->add_option("quiver", quiver, "Presentation file")->required();
  check->add_option("rep", rep, "Representation file")->required();

  auto* homdim = add("homdim", "dim Hom(M, N)");
  homdim->add_option("quiver", quiver, "Presentation file")->required();
  homdim->add_option("rep", rep, "Representation M")->required();
  homdim->add_option("rep2", rep2, "Representation N")->required();

  auto* orbitdim = add("orbitdim", "Dimension of the GL(d)-orbit");
  orbitdim->add_option("quiver", quiver, "Presentation file")->required();
  orbitdim->add_option("rep", rep, "Representation file")->required();

  auto* tangent = add("tangent", "Dimension of the tangent space of rep(I, d)");
  tangent->add_option("quiver", quiver, "Presentation file")->required();
  tangent->add_option("rep", rep, "Representation file")->required();

  auto* ranks = add("ranks", "Maximal rank sequences of a gentle presentation");
  ranks->add_option("quiver", quiver, "Presentation file")->required();
  ranks->add_option("--dim", dim, "Dimension vector, comma separated")->required();
  ranks->add_flag("--attain", attain, "Search for a point attaining each sequence");
  ranks->add_option("--seed", seed, "Random seed")->capture_default_str();
  ranks->add_option("--field", field, "Q or F<p>")->capture_default_str();

  auto* idem = add("idem", "Component of an idempotent matrix in E_n");
  idem->add_option("matrix", file, "File with one matrix row per line")->required();
  idem->add_option("--field", field, "Q or F<p>")->capture_default_str();

  auto* stability = add("stability", "King stability by subspace enumeration over F_p");
  stability->add_option("quiver", quiver, "Presentation file")->required();
  stability->add_option("rep", rep, "Representation file")->required();
  stability->add_option("--weight", weight, "Weight, comma separated")->required();
  stability->add_option("--prime", prime, "Prime field")->capture_default_str();
  stability->add_option("--max-total-dim", max_total_dim, "Largest total dimension enumerated")
      ->capture_default_str();

  auto* moduli = add("moduli", "Moduli shape of a stable decomposition");
  moduli->add_option("decomposition", file, "Decomposition file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) {
      report = cli::classify(quiver, cls);
    } else if (*split) {
      report = cli::split(quiver, split_rep);
    } else if (*envelope) {
      report = cli::envelope(quiver);
    } else if (*blocks) {
      report = cli::blocks(quiver);
    } else if (*strings) {
      report = cli::strings(quiver, max_length, module, field);
    } else if (*bands) {
      report = cli::bands(quiver, max_length, module, lambda, field);
    } else if (*check) {
      report = cli::check(quiver, rep);
    } else if (*homdim) {
      report = cli::homdim(quiver, rep, rep2);
    } else if (*orbitdim) {
      report = cli::orbitdim(quiver, rep);
    } else if (*tangent) {
      report = cli::tangent(quiver, rep);
    } else if (*ranks) {
      report = cli::ranks(quiver, dim, attain, seed, field);
    } else if (*idem) {
      report = cli::idem(file, field);
    } else if (*stability) {
      report = cli::stability(quiver, rep, weight, prime, max_total_dim);
    } else if (*moduli) {
      report = cli::moduli(file);
    }
  } catch (quivertk::Error const& e) {
    if (json) {
      std::cout << cli::Json{{"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }

  if (json) {
    std::cout << report.json.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
  return report.exit_code;
}
