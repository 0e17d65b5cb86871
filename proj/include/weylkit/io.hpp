#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "weylkit/modrep.hpp"
#include "weylkit/permgroup.hpp"

namespace weylkit::io {

using json = nlohmann::ordered_json;

/**
 * Group files: {"degree": n, "generators": ["(1,2,3)", ...]} with optional
 * "name" and "order" (a decimal string or integer, checked when present).
 */
PermGroup group_from_json(json const &j);
json group_to_json(PermGroup const &G, std::string const &name = {});
PermGroup load_group(std::filesystem::path const &path);

/// Module files: {"field": 0 | p, "dimension": n, "generators": [[[...]]]}.
MatModule module_from_json(json const &j);
json module_to_json(MatModule const &m);
MatModule load_module(std::filesystem::path const &path);

json read_json(std::filesystem::path const &path);

/// WEYLKIT_FIXTURES if set, else the source tree's fixtures directory.
std::filesystem::path fixture_dir();
/// A bare name such as "m12" resolves to <fixture_dir>/m12.json; paths are kept.
std::filesystem::path fixture_path(std::string const &name_or_path);

} // namespace weylkit::io
