#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "quivertk/representation.hpp"

namespace quivertk {

  struct Letter {
    ArrowId arrow   = 0;
    bool    inverse = false;

    friend bool operator==(Letter const&, Letter const&)  = default;
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  // A walk in the quiver.  `letters` are stored in walk order: letter i goes
  // from vertex v_{i-1} to v_i, with v_0 = start.  A direct letter a walks
  // from ta to ha, an inverse letter from ha to ta.  Words are rendered right
  // to left like paths, "b^*a" being a followed by the inverse of b; the empty
  // word at v renders as "e_v".
  struct Word {
    VertexId            start = 0;
    std::vector<Letter> letters;

    std::size_t length() const noexcept {
      return letters.size();
    }

    friend bool operator==(Word const&, Word const&) = default;
  };

  VertexId word_end(Quiver const& q, Word const& w);
  Word     inverse(Word const& w, Quiver const& q);

  // Composable, reduced, and no direct or inverse run contains a zero
  // relation.  Requires a monomial presentation without special loops.
  bool is_string(Presentation const& p, Word const& w);

  // Closed, every power is a string, contains letters of both directions and
  // is not a proper power.
  bool is_band(Presentation const& p, Word const& w);

  // Least representative under inversion (strings) or rotation and inversion
  // (bands), comparing letters in rendered order.
  Word canonical_string(Quiver const& q, Word const& w);
  Word canonical_band(Quiver const& q, Word const& w);

  // Canonical strings of length <= max_length: trivial strings first (vertex
  // order), then by length and rendered letters.  UnsupportedError unless p is
  // monomial without special loops.
  std::vector<Word> enumerate_strings(Presentation const& p, std::size_t max_length);
  std::vector<Word> enumerate_bands(Presentation const& p, std::size_t max_length);

  DimensionVector word_dimension_vector(Quiver const& q, Word const& w, bool band);

  Representation string_module(std::shared_ptr<Presentation const> p, Field const& f, Word const& w);

  // The designated letter (first direct letter of the canonical rotation, as
  // rendered) acts by lambda, every other letter by identity.
  Representation band_module(std::shared_ptr<Presentation const> p,
                             Field const&                        f,
                             Word const&                         w,
                             Rational const&                     lambda);

  std::string to_string(Quiver const& q, Word const& w);
  Word        parse_word(Quiver const& q, std::string const& text);

}  // namespace quivertk
