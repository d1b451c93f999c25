#include "indep/csv.hpp"

#include <fstream>
#include <sstream>

#include "indep/errors.hpp"

namespace indep::csv {

std::vector<std::vector<std::string>> parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool row_started = false;

    auto end_cell = [&] {
        row.push_back(cell);
        cell.clear();
    };
    auto end_row = [&] {
        if (row_started || !row.empty()) {
            end_cell();
            rows.push_back(std::move(row));
            row.clear();
        }
        row_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            quoted = true;
            row_started = true;
            break;
        case ',':
            end_cell();
            row_started = true;
            break;
        case '\r':
            break;
        case '\n':
            end_row();
            break;
        default:
            cell += c;
            row_started = true;
            break;
        }
    }
    if (quoted) throw Error("unterminated quote in CSV input");
    end_row();
    return rows;
}

std::vector<std::vector<std::string>> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open CSV file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

namespace {

std::string quote_if_needed(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string format(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ",";
            out += quote_if_needed(row[j]);
        }
        out += "\n";
    }
    return out;
}

void write_file(const std::string& path, const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write CSV file: " + path);
    out << format(rows);
}

} // namespace indep::csv
