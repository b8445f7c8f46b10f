#include "rparea/dataset_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "rparea/errors.h"

namespace rparea {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_field(std::string_view text, const char* name, std::size_t line) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw InputError(fmt::format("line {}: field '{}' is not a valid number: '{}'", line, name,
                                 text),
                     line);
  }
  return value;
}

struct Cell {
  double r = 0.0;
  double w = 0.0;
  bool seen = false;
};

}  // namespace

Dataset read_dataset_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  struct Row {
    std::size_t obs, good;
    double r, w;
    std::size_t line;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split(text);
    if (!header) {
      if (fields.size() != 4 || fields[0] != "obs" || fields[1] != "good" || fields[2] != "r" ||
          fields[3] != "w") {
        throw InputError(fmt::format("line {}: expected header 'obs,good,r,w'", line_no),
                         line_no);
      }
      header = true;
      continue;
    }
    if (fields.size() != 4) {
      throw InputError(
          fmt::format("line {}: expected 4 fields, found {}", line_no, fields.size()), line_no);
    }
    Row row{parse_field<std::size_t>(fields[0], "obs", line_no),
            parse_field<std::size_t>(fields[1], "good", line_no),
            parse_field<double>(fields[2], "r", line_no),
            parse_field<double>(fields[3], "w", line_no), line_no};
    if (row.obs == 0 || row.good == 0) {
      throw InputError(fmt::format("line {}: indices are 1-based", line_no), line_no);
    }
    rows.push_back(row);
  }
  if (!header) throw InputError("empty dataset file", line_no == 0 ? 1 : line_no);
  if (rows.empty()) throw InputError("dataset file has a header but no rows", line_no);

  std::size_t t = 0, k = 0;
  for (const Row& row : rows) {
    t = std::max(t, row.obs);
    k = std::max(k, row.good);
  }
  if (t > rows.size() || k > rows.size() || t * k > rows.size()) {
    throw InputError(fmt::format("expected {} x {} = {} rows, found {}", t, k, t * k,
                                 rows.size()),
                     line_no);
  }
  std::vector<Cell> cells(t * k);
  for (const Row& row : rows) {
    Cell& cell = cells[(row.obs - 1) * k + (row.good - 1)];
    if (cell.seen) {
      throw InputError(fmt::format("line {}: duplicate entry for obs {}, good {}", row.line,
                                   row.obs, row.good),
                       row.line);
    }
    cell = {row.r, row.w, true};
  }
  Matrix prices(t, k), shares(t, k);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      const Cell& cell = cells[i * k + g];
      if (!cell.seen) {
        throw InputError(
            fmt::format("missing entry for obs {}, good {}", i + 1, g + 1), line_no);
      }
      prices(i, g) = cell.r;
      shares(i, g) = cell.w;
    }
  }
  return Dataset::from_shares(std::move(prices), std::move(shares));
}

Dataset read_dataset_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(fmt::format("malformed JSON at byte {}", e.byte));
  }
  try {
    const std::size_t t = doc.at("T").get<std::size_t>();
    const std::size_t k = doc.at("K").get<std::size_t>();
    const auto load = [&](const char* key) {
      const auto& rows = doc.at(key);
      if (!rows.is_array() || rows.size() != t) {
        throw InputError(fmt::format("field '{}' must hold T = {} rows", key, t));
      }
      Matrix m(t, k);
      for (std::size_t i = 0; i < t; ++i) {
        if (!rows[i].is_array() || rows[i].size() != k) {
          throw InputError(fmt::format("field '{}' row {} must hold K = {} values", key, i + 1, k));
        }
        for (std::size_t g = 0; g < k; ++g) m(i, g) = rows[i][g].get<double>();
      }
      return m;
    };
    Matrix prices = load("r");
    Matrix shares = load("w");
    return Dataset::from_shares(std::move(prices), std::move(shares));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(fmt::format("invalid dataset JSON: {}", e.what()));
  }
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path));
  char c = 0;
  while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
  }
  if (!in) throw InputError("empty dataset file", 1);
  in.seekg(0);
  if (c == '{') return read_dataset_json(in);
  return read_dataset_csv(in);
}

void write_dataset_csv(const Dataset& dataset, std::ostream& out) {
  out << "obs,good,r,w\n";
  for (std::size_t i = 0; i < dataset.observations(); ++i) {
    for (std::size_t g = 0; g < dataset.goods(); ++g) {
      fmt::print(out, "{},{},{},{}\n", i + 1, g + 1, dataset.prices()(i, g),
                 dataset.shares()(i, g));
    }
  }
}

void write_dataset_json(const Dataset& dataset, std::ostream& out) {
  const auto rows = [](const Matrix& m) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      a.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
    }
    return a;
  };
  nlohmann::json doc{{"T", dataset.observations()},
                     {"K", dataset.goods()},
                     {"r", rows(dataset.prices())},
                     {"w", rows(dataset.shares())}};
  out << doc.dump(2) << '\n';
}

}  // namespace rparea
