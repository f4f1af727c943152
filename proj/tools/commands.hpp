#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace quivertk::cli {

  using Json = nlohmann::ordered_json;

  // What a command prints: the text report, its JSON twin and the exit code.
  struct Report {
    std::string text;
    Json        json = Json::object();
    int         exit_code = 0;
  };

  Report classify(std::string const& quiver, std::optional<std::string> const& cls);
  Report split(std::string const& quiver, std::optional<std::string> const& rep);
  Report envelope(std::string const& quiver);
  Report blocks(std::string const& quiver);
  Report strings(std::string const&                quiver,
                 std::size_t                       max_length,
                 std::optional<std::string> const& module,
                 std::string const&                field);
  Report bands(std::string const&                quiver,
               std::size_t                       max_length,
               std::optional<std::string> const& module,
               std::string const&                lambda,
               std::string const&                field);
  Report check(std::string const& quiver, std::string const& rep);
  Report homdim(std::string const& quiver, std::string const& rep1, std::string const& rep2);
  Report orbitdim(std::string const& quiver, std::string const& rep);
  Report tangent(std::string const& quiver, std::string const& rep);
  Report ranks(std::string const& quiver,
               std::string const& dim,
               bool               attain,
               std::uint64_t      seed,
               std::string const& field);
  Report idem(std::string const& matrix, std::string const& field);
  Report stability(std::string const& quiver,
                   std::string const& rep,
                   std::string const& weight,
                   std::uint32_t      prime,
                   std::size_t        max_total_dim);
  Report moduli(std::string const& decomposition);

}  // namespace quivertk::cli
