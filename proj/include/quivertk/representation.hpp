#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quivertk/field.hpp"
#include "quivertk/matrix.hpp"
#include "quivertk/quiver.hpp"

namespace quivertk {

  // A point of rep_Q(d): one matrix of shape d(ha) x d(ta) per arrow.  Shapes
  // are validated on construction, relations are not (see check_rep).
  class Representation {
   public:
    Representation(std::shared_ptr<Presentation const> presentation,
                   Field                               field,
                   DimensionVector                     dim,
                   std::vector<Matrix>                 matrices);

    static Representation zero(std::shared_ptr<Presentation const> presentation,
                               Field                               field,
                               DimensionVector                     dim);

    Presentation const& presentation() const noexcept {
      return *_presentation;
    }
    std::shared_ptr<Presentation const> const& presentation_ptr() const noexcept {
      return _presentation;
    }
    Quiver const& quiver() const noexcept {
      return _presentation->quiver();
    }
    Field const& field() const noexcept {
      return _field;
    }
    DimensionVector const& dimension() const noexcept {
      return _dim;
    }
    Matrix const& matrix(ArrowId a) const {
      return _matrices.at(a);
    }
    std::vector<Matrix> const& matrices() const noexcept {
      return _matrices;
    }

    Representation with_matrix(ArrowId a, Matrix m) const;

    // Same presentation (by value), field, dimension vector and matrices.
    friend bool operator==(Representation const& x, Representation const& y);

   private:
    std::shared_ptr<Presentation const> _presentation;
    Field                               _field;
    DimensionVector                     _dim;
    std::vector<Matrix>                 _matrices;
  };

  // Product of the arrow matrices along a path (last arrow leftmost).
  Matrix evaluate(Representation const& m, Path const& path);
  Matrix evaluate(Representation const& m, Relation const& r);

  struct RepCheck {
    bool                       valid = true;
    std::optional<std::size_t> violated;  // index of the first failing relation
    std::string                message;

    explicit operator bool() const noexcept {
      return valid;
    }
  };

  RepCheck check_rep(Representation const& m);

  // Throws ValidationError naming the first violated relation.
  void require_valid(Representation const& m);

  // The same matrices read in another field: Q -> F_p reduces entries (their
  // denominators must be prime to p).  Throws ValidationError otherwise.
  Representation change_field(Representation const& m, Field const& f);

  // Block-diagonal direct sum; presentations and fields must agree.
  Representation direct_sum(Representation const& m, Representation const& n);

  // Text format:
  //
  //   rep <name> over Q|F<p>
  //   dim <vertex>=<n> ...
  //   mat <arrow> <rows> <cols>
  //   <row of entries>
  //   ...
  //
  // Arrows without a mat block are zero.  "over Fp" takes its prime from
  // `fallback_prime`.  Throws ParseError.
  Representation parse_representation(std::string const&                  text,
                                      std::shared_ptr<Presentation const> presentation,
                                      std::uint32_t                       fallback_prime = 0);

  // Name recorded in the header of a representation file.
  std::string representation_name(std::string const& text);

  std::string serialize_representation(Representation const& m, std::string const& name = "M");

}  // namespace quivertk
