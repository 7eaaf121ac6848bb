#pragma once

// CSV emission with fixed float formatting (17 significant digits) so outputs
// are bit-reproducible for identical config + seed.

#include "wcontact/common.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace wcontact {

inline std::string csv_num(double v) { return strfmt("%.17g", v); }
inline std::string csv_int(long v) { return strfmt("%ld", v); }

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : path_(path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    out_.open(path);
    if (!out_) throw Error(strfmt("cannot open %s for writing", path.string().c_str()));
  }

  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw Error(strfmt("write to %s failed", path_.string().c_str()));
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace wcontact
