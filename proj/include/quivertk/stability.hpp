#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quivertk/representation.hpp"

namespace quivertk {

  long long weight_pairing(Weight const& theta, DimensionVector const& d);

  // Brute-force limits: total dimension, and the number of candidate
  // subspace tuples.
  struct StabilityGuard {
    std::size_t max_total_dim = 8;
    std::size_t max_candidates = 20'000'000;
  };

  // One subspace per vertex, given by the columns of a basis matrix.
  struct Subrepresentation {
    DimensionVector     dim;
    std::vector<Matrix> bases;
  };

  // Every subrepresentation of M (over F_p), in a fixed enumeration order.
  // Throws GuardError when a limit is exceeded and UnsupportedError over Q.
  std::vector<Subrepresentation> subrepresentations(Representation const& m,
                                                    StabilityGuard const& guard = {});

  std::set<DimensionVector> subrep_dimension_vectors(Representation const& m,
                                                     StabilityGuard const& guard = {});

  // True iff the given subspaces are closed under every arrow of M.
  bool is_subrepresentation(Representation const& m, Subrepresentation const& s);

  enum class Stability { unstable, semistable_not_stable, stable };
  std::string to_string(Stability s);

  struct StabilityVerdict {
    Stability stability = Stability::stable;
    // theta(dim M)
    long long total = 0;
    // Unstable with total == 0: a subrepresentation with theta > 0.
    // Semistable but not stable: a proper nonzero one with theta = 0.
    std::optional<Subrepresentation> certificate;
    long long                        certificate_value = 0;
  };

  // King's criterion by enumeration.  The zero representation is reported as
  // semistable but not stable.
  StabilityVerdict check_stability(Representation const& m,
                                   Weight const&         theta,
                                   StabilityGuard const& guard = {});

  // Re-derives the verdict's claims from its certificate alone.
  bool replay_certificate(Representation const& m, Weight const& theta, StabilityVerdict const& v);

  struct PolystableClass {
    std::size_t              representative;  // index into the input list
    std::vector<std::size_t> members;
    std::size_t              multiplicity;
  };

  // Groups stable factors by isomorphism: same dimension vector and nonzero
  // Hom in both directions.  Throws ValidationError if some factor is not
  // marked stable.
  std::vector<PolystableClass> group_polystable_factors(std::vector<Representation> const& factors,
                                                        std::vector<bool> const& verified_stable);

  struct DecompositionFactor {
    std::string descriptor;
    std::size_t multiplicity = 1;
    int         c_value      = 1;
    bool        stable       = true;
  };

  struct StableDecompositionInput {
    std::vector<DecompositionFactor> factors;
    // Set only once the presentation has been checked to be clannish.
    bool clannish = false;
  };

  // Decomposition file:
  //
  //   presentation <path>      (optional; the caller classifies it)
  //   clannish                 (optional; asserts the presentation is clannish)
  //   factor <descriptor> m=<int> [c=<0|1>] [stable=<0|1>]
  //
  // Descriptors starting with "band:" default to c=1, "string:" to c=0; any
  // other descriptor must give c.  Throws ParseError.
  struct DecompositionFile {
    StableDecompositionInput   input;
    std::optional<std::string> presentation_path;
    bool                       clannish_asserted = false;
  };
  DecompositionFile parse_decomposition(std::string const& text);

  // Exponents of the projective-space factors; empty means a point.
  struct ModuliShape {
    std::vector<std::size_t> exponents;

    std::size_t dimension() const;
    friend bool operator==(ModuliShape const&, ModuliShape const&) = default;
  };
  std::string to_string(ModuliShape const& s);

  // Factors with c = 0 contribute a point, the others P^m.  Throws
  // UnsupportedError unless dec.clannish, ValidationError on unstable or
  // repeated factors or zero multiplicities.
  ModuliShape moduli_shape(StableDecompositionInput const& dec);

}  // namespace quivertk
