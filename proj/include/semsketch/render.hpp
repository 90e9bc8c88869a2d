#pragma once

#include <filesystem>
#include <string>

#include "semsketch/sketch.hpp"

namespace semsketch {

// Standalone HTML page: one column per role section in section order,
// role name and total as the header, fillers with counts below.
// Anonymized sketches are titled "(anonymous)".
std::string render_sketch_html(const Sketch& sketch);

void render_sketch(const Sketch& sketch, const std::filesystem::path& out);

}  // namespace semsketch
