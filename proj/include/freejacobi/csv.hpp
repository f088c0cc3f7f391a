#ifndef FREEJACOBI_CSV_HPP
#define FREEJACOBI_CSV_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace fj::csv {

// 17 significant digits, so a double round-trips through text.
std::string num(double x);
// RFC 4180 quoting: fields with a comma, quote or line break are quoted.
std::string field(const std::string& s);
void write_row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace fj::csv

#endif
