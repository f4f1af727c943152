#pragma once

#include <string>

#include "quivertk/quiver.hpp"

namespace quivertk {

  // Line-oriented quiver DSL:
  //
  //   vertex <id> [<id> ...]
  //   arrow <id>: <tail> -> <head>
  //   loop <id>: <vertex> [special]
  //   relations
  //   zero <id>*<id>[*<id>...]
  //   rel [<coef>] <word> + [<coef>] <word> [+ ...]
  //   idem <loop-id>
  //
  // Words compose right to left: "b*a" applies a first.  A special loop without
  // an explicit idem line gets one appended.  Throws ParseError.
  Presentation parse_presentation(std::string const& text);

  // Inverse of parse_presentation; every idempotent relation is written out.
  std::string serialize_presentation(Presentation const& p);

}  // namespace quivertk
