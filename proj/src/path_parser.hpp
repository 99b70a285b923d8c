#pragma once

#include "gis/path.hpp"
#include "text_cursor.hpp"

namespace gis::detail {

Path parse_path_at(TextCursor& in, Graph const& g);

}  // namespace gis::detail
