#ifndef TORUS_PARTITION_IO_HPP
#define TORUS_PARTITION_IO_HPP

#include <iosfwd>
#include <string>

#include "torus/core.hpp"

namespace torus {

// Partition JSON schema:
//   {"m": int, "tau": "<decimal>", "provenance": str, "regions": [...]}
// region: {"kind":"polygon","vertices":[[x,y],...]}
//       | {"kind":"vstrip"|"hstrip","lo":x0,"hi":x1}
//       | {"kind":"pixels","s":int,"cells":[[i,j],...]}

std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

void save_partition(const Partition& p, const std::string& path);
Partition load_partition(const std::string& path);

} // namespace torus

#endif
