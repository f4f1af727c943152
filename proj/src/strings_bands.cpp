#include "quivertk/strings_bands.hpp"

#include <algorithm>
#include <set>

#include "quivertk/errors.hpp"

namespace quivertk {

  namespace {

    VertexId letter_source(Quiver const& q, Letter l) {
      return l.inverse ? q.arrow(l.arrow).head : q.arrow(l.arrow).tail;
    }

    VertexId letter_target(Quiver const& q, Letter l) {
      return l.inverse ? q.arrow(l.arrow).tail : q.arrow(l.arrow).head;
    }

    void require_supported(Presentation const& p) {
      if (p.quiver().has_special_loops()) {
        throw UnsupportedError("strings and bands need a presentation without special loops");
      }
      if (!p.is_monomial()) {
        throw UnsupportedError("strings and bands need a monomial presentation");
      }
    }

    // Rendered order, the order canonical forms are compared in.
    std::vector<Letter> key(Word const& w) {
      return {w.letters.rbegin(), w.letters.rend()};
    }

    bool contains(std::vector<ArrowId> const& word, std::vector<ArrowId> const& pattern) {
      return std::search(word.begin(), word.end(), pattern.begin(), pattern.end()) != word.end();
    }

    Word rotate(Quiver const& q, Word const& w, std::size_t k) {
      Word out;
      out.start = letter_source(q, w.letters[k]);
      out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(k), w.letters.end());
      out.letters.insert(out.letters.end(), w.letters.begin(),
                         w.letters.begin() + static_cast<std::ptrdiff_t>(k));
      return out;
    }

    bool is_proper_power(Word const& w) {
      std::size_t n = w.length();
      for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0) {
          continue;
        }
        bool repeats = true;
        for (std::size_t i = period; i < n && repeats; ++i) {
          repeats = w.letters[i] == w.letters[i - period];
        }
        if (repeats) {
          return true;
        }
      }
      return false;
    }

    // Position of every basis vector z_i (i = 0..n for strings, 0..n-1 for
    // bands) within its vertex.
    struct Basis {
      std::vector<VertexId>    vertex;
      std::vector<std::size_t> local;
      DimensionVector          dim;
    };

    Basis place_basis(Quiver const& q, Word const& w, bool band) {
      Basis b;
      b.dim.values.assign(q.num_vertices(), 0);
      std::size_t count = band ? w.length() : w.length() + 1;
      VertexId    v     = w.start;
      for (std::size_t i = 0; i < count; ++i) {
        b.vertex.push_back(v);
        b.local.push_back(b.dim[v]++);
        if (i < w.length()) {
          v = letter_target(q, w.letters[i]);
        }
      }
      return b;
    }

    Representation build_module(std::shared_ptr<Presentation const> p,
                                Field const&                        f,
                                Word const&                         w,
                                bool                                band,
                                std::optional<std::size_t>          scaled,
                                Rational const&                     lambda) {
      Quiver const&       q = p->quiver();
      Basis               b = place_basis(q, w, band);
      std::vector<Matrix> ms;
      for (auto const& a : q.arrows()) {
        ms.emplace_back(b.dim[a.head], b.dim[a.tail]);
      }
      std::size_t n = b.vertex.size();
      for (std::size_t i = 0; i < w.length(); ++i) {
        std::size_t from = i, to = band ? (i + 1) % n : i + 1;
        Letter      l    = w.letters[i];
        if (l.inverse) {
          std::swap(from, to);
        }
        Rational c = scaled && *scaled == i ? lambda : Rational(1);
        Matrix&  m = ms[l.arrow];
        m(b.local[to], b.local[from]) = f.add(m(b.local[to], b.local[from]), c);
      }
      return Representation(std::move(p), f, b.dim, std::move(ms));
    }

  }  // namespace

  VertexId word_end(Quiver const& q, Word const& w) {
    return w.letters.empty() ? w.start : letter_target(q, w.letters.back());
  }

  Word inverse(Word const& w, Quiver const& q) {
    Word out;
    out.start = word_end(q, w);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.letters.push_back({it->arrow, !it->inverse});
    }
    return out;
  }

  bool is_string(Presentation const& p, Word const& w) {
    Quiver const& q = p.quiver();
    if (w.start >= q.num_vertices()) {
      return false;
    }
    VertexId v = w.start;
    for (std::size_t i = 0; i < w.length(); ++i) {
      Letter l = w.letters[i];
      if (l.arrow >= q.num_arrows() || letter_source(q, l) != v) {
        return false;
      }
      if (i > 0 && w.letters[i - 1].arrow == l.arrow && w.letters[i - 1].inverse != l.inverse) {
        return false;
      }
      v = letter_target(q, l);
    }
    auto zero = p.zero_paths();
    // Maximal runs of one direction, as paths.
    std::size_t i = 0;
    while (i < w.length()) {
      std::size_t j = i;
      while (j < w.length() && w.letters[j].inverse == w.letters[i].inverse) {
        ++j;
      }
      std::vector<ArrowId> run;
      for (std::size_t k = i; k < j; ++k) {
        run.push_back(w.letters[k].arrow);
      }
      if (w.letters[i].inverse) {
        std::reverse(run.begin(), run.end());
      }
      for (auto const& z : zero) {
        if (contains(run, z.arrows())) {
          return false;
        }
      }
      i = j;
    }
    return true;
  }

  bool is_band(Presentation const& p, Word const& w) {
    Quiver const& q = p.quiver();
    if (w.letters.empty() || word_end(q, w) != w.start || is_proper_power(w)) {
      return false;
    }
    bool direct = false, inverse_letter = false;
    for (auto l : w.letters) {
      (l.inverse ? inverse_letter : direct) = true;
    }
    if (!direct || !inverse_letter) {
      return false;
    }
    std::size_t longest = 2;
    for (auto const& z : p.zero_paths()) {
      longest = std::max(longest, z.length());
    }
    Word power{w.start, {}};
    while (power.length() < 2 * w.length() + longest) {
      power.letters.insert(power.letters.end(), w.letters.begin(), w.letters.end());
    }
    return is_string(p, power);
  }

  Word canonical_string(Quiver const& q, Word const& w) {
    Word inv = inverse(w, q);
    if (w.letters.empty()) {
      return w;
    }
    return key(inv) < key(w) ? inv : w;
  }

  Word canonical_band(Quiver const& q, Word const& w) {
    Word best = w;
    for (Word const& base : {w, inverse(w, q)}) {
      for (std::size_t k = 0; k < base.length(); ++k) {
        Word r = rotate(q, base, k);
        if (key(r) < key(best)) {
          best = std::move(r);
        }
      }
    }
    return best;
  }

  namespace {

    // All strings of length 1..max_length, grouped by length.
    std::vector<std::vector<Word>> all_strings(Presentation const& p, std::size_t max_length) {
      Quiver const&                  q = p.quiver();
      std::vector<std::vector<Word>> out(max_length + 1);
      if (max_length == 0) {
        return out;
      }
      for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        for (bool inv : {false, true}) {
          Letter l{a, inv};
          out[1].push_back({letter_source(q, l), {l}});
        }
      }
      for (std::size_t len = 2; len <= max_length; ++len) {
        for (auto const& w : out[len - 1]) {
          VertexId v = word_end(q, w);
          for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            for (bool inv : {false, true}) {
              Letter l{a, inv};
              if (letter_source(q, l) != v) {
                continue;
              }
              Word x = w;
              x.letters.push_back(l);
              if (is_string(p, x)) {
                out[len].push_back(std::move(x));
              }
            }
          }
        }
      }
      return out;
    }

    void sort_by_key(std::vector<Word>& ws) {
      std::sort(ws.begin(), ws.end(), [](Word const& x, Word const& y) {
        if (x.length() != y.length()) {
          return x.length() < y.length();
        }
        return key(x) < key(y);
      });
    }

  }  // namespace

  std::vector<Word> enumerate_strings(Presentation const& p, std::size_t max_length) {
    require_supported(p);
    Quiver const&     q = p.quiver();
    std::vector<Word> out;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      out.push_back({v, {}});
    }
    auto              by_length = all_strings(p, max_length);
    std::vector<Word> nontrivial;
    for (std::size_t len = 1; len <= max_length; ++len) {
      for (auto const& w : by_length[len]) {
        if (canonical_string(q, w) == w) {
          nontrivial.push_back(w);
        }
      }
    }
    sort_by_key(nontrivial);
    out.insert(out.end(), nontrivial.begin(), nontrivial.end());
    return out;
  }

  std::vector<Word> enumerate_bands(Presentation const& p, std::size_t max_length) {
    require_supported(p);
    Quiver const&     q = p.quiver();
    auto              by_length = all_strings(p, max_length);
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_length; ++len) {
      for (auto const& w : by_length[len]) {
        if (word_end(q, w) == w.start && is_band(p, w) && canonical_band(q, w) == w) {
          out.push_back(w);
        }
      }
    }
    sort_by_key(out);
    return out;
  }

  DimensionVector word_dimension_vector(Quiver const& q, Word const& w, bool band) {
    return place_basis(q, w, band).dim;
  }

  Representation string_module(std::shared_ptr<Presentation const> p, Field const& f, Word const& w) {
    require_supported(*p);
    if (!is_string(*p, w)) {
      throw ValidationError("'" + to_string(p->quiver(), w) + "' is not a string");
    }
    return build_module(std::move(p), f, w, false, std::nullopt, Rational(1));
  }

  Representation band_module(std::shared_ptr<Presentation const> p,
                             Field const&                        f,
                             Word const&                         w,
                             Rational const&                     lambda) {
    require_supported(*p);
    if (!is_band(*p, w)) {
      throw ValidationError("'" + to_string(p->quiver(), w) + "' is not a band");
    }
    if (f.is_zero(lambda)) {
      throw ValidationError("band parameter must be nonzero");
    }
    Word c = canonical_band(p->quiver(), w);
    // First direct letter in rendered order is the last one in walk order.
    std::size_t designated = 0;
    for (std::size_t i = 0; i < c.length(); ++i) {
      if (!c.letters[i].inverse) {
        designated = i;
      }
    }
    return build_module(std::move(p), f, c, true, designated, f.normalize(lambda));
  }

  std::string to_string(Quiver const& q, Word const& w) {
    if (w.letters.empty()) {
      return "e_" + q.vertex_name(w.start);
    }
    std::string out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (!out.empty()) {
        out += "*";
      }
      out += q.arrow(it->arrow).name;
      if (it->inverse) {
        out += "^";
      }
    }
    return out;
  }

  Word parse_word(Quiver const& q, std::string const& text) {
    if (text.rfind("e_", 0) == 0 && q.find_vertex(text.substr(2))) {
      return {q.vertex_id(text.substr(2)), {}};
    }
    std::vector<Letter> rendered;
    std::size_t         pos = 0;
    while (pos <= text.size()) {
      auto        star  = text.find('*', pos);
      std::string token = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      Letter      l;
      if (!token.empty() && token.back() == '^') {
        l.inverse = true;
        token.pop_back();
      }
      auto a = q.find_arrow(token);
      if (!a) {
        throw ValidationError("unknown arrow '" + token + "' in word '" + text + "'");
      }
      l.arrow = *a;
      rendered.push_back(l);
      if (star == std::string::npos) {
        break;
      }
      pos = star + 1;
    }
    Word w;
    w.letters.assign(rendered.rbegin(), rendered.rend());
    w.start    = letter_source(q, w.letters.front());
    VertexId v = w.start;
    for (auto l : w.letters) {
      if (letter_source(q, l) != v) {
        throw ValidationError("word '" + text + "' is not composable");
      }
      v = letter_target(q, l);
    }
    return w;
  }

}  // namespace quivertk
