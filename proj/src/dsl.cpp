#include "quivertk/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "quivertk/errors.hpp"

namespace quivertk {

  namespace {

    struct Token {
      std::string text;
      std::size_t column;
    };

    std::vector<Token> tokenize(std::string const& line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))
               && line[i] != ':') {
          ++i;
        }
        if (i > start) {
          out.push_back({line.substr(start, i - start), start + 1});
        }
        if (i < line.size() && line[i] == ':') {
          out.push_back({":", i + 1});
          ++i;
        }
      }
      return out;
    }

    bool is_coefficient(std::string const& s) {
      std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (i >= s.size()) {
        return false;
      }
      bool seen_slash = false, digit_after = false;
      for (; i < s.size(); ++i) {
        if (s[i] == '/' && !seen_slash) {
          seen_slash  = true;
          digit_after = false;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          return false;
        }
        digit_after = true;
      }
      return digit_after;
    }

    class Parser {
     public:
      explicit Parser(std::string const& text) : _text(text) {}

      Presentation run() {
        std::istringstream in(_text);
        std::string        raw;
        while (std::getline(in, raw)) {
          ++_line;
          auto hash = raw.find('#');
          if (hash != std::string::npos) {
            raw.erase(hash);
          }
          auto tokens = tokenize(raw);
          if (tokens.empty()) {
            continue;
          }
          try {
            dispatch(tokens);
          } catch (ValidationError const& e) {
            throw ParseError(e.what(), _line, tokens.front().column);
          }
        }
        for (ArrowId e : _quiver.special_loops()) {
          if (_explicit_idem.count(e) == 0) {
            _relations.push_back(IdempotentLoop{e});
          }
        }
        try {
          return Presentation(std::move(_quiver), std::move(_relations));
        } catch (ValidationError const& e) {
          throw ParseError(e.what(), _line, 1);
        }
      }

     private:
      [[noreturn]] void fail(std::string const& msg, std::size_t column) const {
        throw ParseError(msg, _line, column);
      }

      void dispatch(std::vector<Token> const& t) {
        std::string const& kw = t[0].text;
        if (kw == "relations") {
          if (t.size() != 1) {
            fail("unexpected text after 'relations'", t[1].column);
          }
          if (_in_relations) {
            fail("duplicate 'relations' line", t[0].column);
          }
          _in_relations = true;
        } else if (kw == "vertex" || kw == "arrow" || kw == "loop") {
          if (_in_relations) {
            fail("'" + kw + "' declaration after 'relations'", t[0].column);
          }
          if (kw == "vertex") {
            parse_vertices(t);
          } else if (kw == "arrow") {
            parse_arrow(t);
          } else {
            parse_loop(t);
          }
        } else if (kw == "zero" || kw == "rel" || kw == "idem") {
          if (!_in_relations) {
            fail("'" + kw + "' before the 'relations' line", t[0].column);
          }
          if (kw == "zero") {
            parse_zero(t);
          } else if (kw == "rel") {
            parse_rel(t);
          } else {
            parse_idem(t);
          }
        } else {
          fail("unknown keyword '" + kw + "'", t[0].column);
        }
      }

      VertexId vertex(Token const& tok) const {
        if (auto v = _quiver.find_vertex(tok.text)) {
          return *v;
        }
        fail("unknown vertex '" + tok.text + "'", tok.column);
      }

      Path word(Token const& tok) const {
        std::vector<std::string> names;
        std::string              cur;
        for (char c : tok.text) {
          if (c == '*') {
            names.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
        names.push_back(cur);
        std::vector<ArrowId> arrows;
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
          if (it->empty()) {
            fail("empty arrow name in word '" + tok.text + "'", tok.column);
          }
          auto a = _quiver.find_arrow(*it);
          if (!a) {
            fail("unknown arrow '" + *it + "'", tok.column);
          }
          arrows.push_back(*a);
        }
        try {
          return Path(_quiver, std::move(arrows));
        } catch (ValidationError const& e) {
          fail(std::string("non-composable path '") + tok.text + "': " + e.what(), tok.column);
        }
      }

      void parse_vertices(std::vector<Token> const& t) {
        for (std::size_t i = 1; i < t.size(); ++i) {
          try {
            _quiver.add_vertex(t[i].text);
          } catch (ValidationError const& e) {
            fail(e.what(), t[i].column);
          }
        }
      }

      // arrow <id> : <tail> -> <head>
      void parse_arrow(std::vector<Token> const& t) {
        if (t.size() != 6 || t[2].text != ":" || t[4].text != "->") {
          fail("expected 'arrow <id>: <tail> -> <head>'", t[0].column);
        }
        VertexId tail = vertex(t[3]), head = vertex(t[5]);
        try {
          _quiver.add_arrow(t[1].text, tail, head, false);
        } catch (ValidationError const& e) {
          fail(e.what(), t[1].column);
        }
      }

      // loop <id> : <vertex> [special]
      void parse_loop(std::vector<Token> const& t) {
        if (t.size() < 4 || t.size() > 5 || t[2].text != ":"
            || (t.size() == 5 && t[4].text != "special")) {
          fail("expected 'loop <id>: <vertex> [special]'", t[0].column);
        }
        VertexId v = vertex(t[3]);
        try {
          _quiver.add_arrow(t[1].text, v, v, t.size() == 5);
        } catch (ValidationError const& e) {
          fail(e.what(), t[1].column);
        }
      }

      void parse_zero(std::vector<Token> const& t) {
        if (t.size() != 2) {
          fail("expected 'zero <word>'", t[0].column);
        }
        Path p = word(t[1]);
        if (p.length() < 2) {
          fail("zero relations need at least two arrows", t[1].column);
        }
        _relations.push_back(ZeroPath{std::move(p)});
      }

      void parse_rel(std::vector<Token> const& t) {
        LinearCombination  lc;
        std::vector<Token> term;
        auto               flush = [&](std::size_t column) {
          if (term.empty() || term.size() > 2) {
            fail("malformed term in linear combination", column);
          }
          Rational coef = 1;
          if (term.size() == 2) {
            if (!is_coefficient(term[0].text)) {
              fail("'" + term[0].text + "' is not a coefficient", term[0].column);
            }
            coef = parse_rational(term[0].text);
          }
          lc.terms.push_back(Term{coef, word(term.back())});
          term.clear();
        };
        for (std::size_t i = 1; i < t.size(); ++i) {
          if (t[i].text == "+") {
            flush(t[i].column);
          } else {
            term.push_back(t[i]);
          }
        }
        flush(t.back().column);
        _relations.push_back(std::move(lc));
      }

      void parse_idem(std::vector<Token> const& t) {
        if (t.size() != 2) {
          fail("expected 'idem <loop-id>'", t[0].column);
        }
        auto a = _quiver.find_arrow(t[1].text);
        if (!a) {
          fail("unknown arrow '" + t[1].text + "'", t[1].column);
        }
        if (!_quiver.arrow(*a).special) {
          fail("idempotent relation on non-special arrow '" + t[1].text + "'", t[1].column);
        }
        if (!_explicit_idem.insert(*a).second) {
          fail("duplicate idempotent relation for '" + t[1].text + "'", t[1].column);
        }
        _relations.push_back(IdempotentLoop{*a});
      }

      std::string const&    _text;
      std::size_t           _line = 0;
      bool                  _in_relations = false;
      Quiver                _quiver;
      std::vector<Relation> _relations;
      std::set<ArrowId>     _explicit_idem;
    };

  }  // namespace

  Presentation parse_presentation(std::string const& text) {
    return Parser(text).run();
  }

  std::string serialize_presentation(Presentation const& p) {
    auto const&        q = p.quiver();
    std::ostringstream os;
    if (q.num_vertices() > 0) {
      os << "vertex";
      for (auto const& v : q.vertices()) {
        os << ' ' << v;
      }
      os << '\n';
    }
    for (auto const& a : q.arrows()) {
      if (a.tail == a.head) {
        os << "loop " << a.name << ": " << q.vertex_name(a.tail) << (a.special ? " special" : "")
           << '\n';
      } else {
        os << "arrow " << a.name << ": " << q.vertex_name(a.tail) << " -> "
           << q.vertex_name(a.head) << '\n';
      }
    }
    os << "relations\n";
    for (auto const& r : p.relations()) {
      os << to_string(q, r) << '\n';
    }
    return os.str();
  }

}  // namespace quivertk
