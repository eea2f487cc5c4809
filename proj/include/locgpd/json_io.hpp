#pragma once

#include <string>

#include "locgpd/core.hpp"

namespace locgpd {

/// Groupoid interchange format. Top-level keys: "objects", "arrows"
/// ({id,src,tgt}), "units" (object -> arrow id), "mult" ([g,h,gh] triples),
/// "inv" ([g,ginv] pairs). Serialization is canonical: mult/inv rows sorted
/// by arrow id, so save(load(s)) == s for canonical inputs.
std::string to_json(const FiniteLocalGroupoid& g);
FiniteLocalGroupoid from_json(const std::string& text);

FiniteLocalGroupoid load_groupoid(const std::string& path);
void save_groupoid(const FiniteLocalGroupoid& g, const std::string& path);

} // namespace locgpd
