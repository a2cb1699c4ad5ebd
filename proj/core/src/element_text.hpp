#pragma once

#include "oagw/group.hpp"
#include "text_cursor.hpp"

namespace oagw::detail {

/// Parses one element ("0" or a braced list) at the cursor.
GroupElement parseElementAt(TextCursor& cur, Construction c);

/// Parses "G2[m].c", "G2[m].s", "G1[b].c" or "G1[b].s[p]" at the cursor.
Position parsePositionAt(TextCursor& cur);

/// Signed rational literal at the cursor ("-3/4").
Rational parseRationalAt(TextCursor& cur);

}  // namespace oagw::detail
