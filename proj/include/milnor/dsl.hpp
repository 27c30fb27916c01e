#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "milnor/map.hpp"

namespace milnor {

/// Errors raised while parsing map definitions. `position` is a byte offset
/// into the source string.
struct ParseError : std::runtime_error {
  enum class Kind { Syntax, UnknownIdentifier, NonPolynomial };
  ParseError(Kind k, std::size_t pos, const std::string& message)
      : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"),
        kind(k),
        position(pos) {}
  Kind kind;
  std::size_t position;
};

enum class MapKind { Real, Complex };

struct MapSource {
  std::string text;
  MapKind kind;
  MapR4R2 map;
  bool decimal_literals = false;  // decimals parse but weaken the exact-identity tests
};

/// `f = <poly>; g = <poly>` over variables x,y,u,v with integer/decimal
/// literals, + - * ^ and parentheses. Constant terms must vanish.
MapR4R2 parse_real(const std::string& src);

/// `F = <expr>` over z, w, conj(z), conj(w); expands z = x+iy, w = u+iv and
/// returns (Re, Im). `conj` applies only directly to z or w.
MapR4R2 parse_complex(const std::string& src);

/// Dispatch on the statement head: `F =` is complex, `f =` is real.
MapSource parse_map(const std::string& src);

/// Canonical real-pair rendering; re-parsing it reproduces the map exactly.
std::string pretty_print(const MapR4R2& F);

/// Exponents (p,q) when the complex source is syntactically z^p - w^q.
std::optional<std::pair<int, int>> match_brieskorn(const std::string& src);

}  // namespace milnor
