#ifndef RPAREA_TOOLS_TABLE_H_
#define RPAREA_TOOLS_TABLE_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rparea::cli {

// Rows of preformatted cells; the formatting fixes the printed digits so
// that reruns compare byte for byte.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_csv(const Table& table, std::ostream& out);
// Array of objects; cells that parse as numbers are emitted as numbers.
void write_json(const Table& table, std::ostream& out);

}  // namespace rparea::cli

#endif  // RPAREA_TOOLS_TABLE_H_
