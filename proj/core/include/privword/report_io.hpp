#ifndef PRIVWORD_REPORT_IO_HPP
#define PRIVWORD_REPORT_IO_HPP

#include <iosfwd>
#include <string>

#include "privword/census.hpp"
#include "privword/verify.hpp"

namespace privword {

// Report writers.  Metadata (tool version, timestamp) goes into lines
// prefixed "# meta:" in CSV and the "meta" object in JSON; everything else
// is the data section, which is byte-identical across runs with the same
// config.  Newlines are always LF; numbers use the C locale.

void write_census_csv(const CountTable& table, std::ostream& os,
                      bool include_meta = true);
void write_census_json(const CountTable& table, std::ostream& os);

void write_verify_csv(const VerifyReport& report, std::ostream& os,
                      bool include_meta = true);
void write_verify_json(const VerifyReport& report, std::ostream& os);

std::string census_csv_string(const CountTable& table, bool include_meta = false);

}  // namespace privword

#endif
