#ifndef INDEP_CSV_HPP
#define INDEP_CSV_HPP

#include <string>
#include <vector>

namespace indep::csv {

// Minimal CSV: UTF-8, comma-separated, optional double-quote quoting
// with "" escapes. Rows may differ in length; the caller validates.
std::vector<std::vector<std::string>> parse(const std::string& text);

std::vector<std::vector<std::string>> read_file(const std::string& path);

std::string format(const std::vector<std::vector<std::string>>& rows);

void write_file(const std::string& path, const std::vector<std::vector<std::string>>& rows);

} // namespace indep::csv

#endif // INDEP_CSV_HPP
