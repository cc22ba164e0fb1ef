#pragma once

// Rows (a, x, y, z) of xyz(x+y+z) = a: CSV/JSON I/O and exact verification.

#include <json.hpp>

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "xyzfam/exact/rational.hpp"
#include "xyzfam/exact/text.hpp"
#include "xyzfam/search/table1_data.hpp"

namespace xyzfam {

struct TableRow {
    long a;
    Rational x, y, z;

    Rational value() const { return x * y * z * (x + y + z); }

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline std::string to_csv(const TableRow& r) {
    return std::to_string(r.a) + "," + r.x.to_string() + "," + r.y.to_string() + "," + r.z.to_string();
}

inline nlohmann::json to_json(const TableRow& r) {
    return {{"a", r.a}, {"x", r.x.to_string()}, {"y", r.y.to_string()}, {"z", r.z.to_string()}};
}

/// One "a,x,y,z" line.  Throws MalformedRow.
inline TableRow parse_table_row(std::string_view line, std::size_t line_no = 0) {
    auto fail = [&](const std::string& why) -> TableRow {
        throw MalformedRow("line " + std::to_string(line_no) + ": " + why + " in '" + std::string(line) + "'");
    };
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(trim(cur));
    if (cells.size() != 4) return fail("expected 4 fields, got " + std::to_string(cells.size()));
    try {
        Rational a = Rational::parse(cells[0]);
        if (!a.is_integer() || !a.numerator().fits_slong_p()) return fail("a is not a machine integer");
        return {a.numerator().get_si(), Rational::parse(cells[1]), Rational::parse(cells[2]),
                Rational::parse(cells[3])};
    } catch (const ParseError& e) {
        return fail(e.what());
    } catch (const DivisionByZero& e) {
        return fail(e.what());
    }
}

/// Blank lines and an "a,x,y,z" header are skipped.
inline std::vector<TableRow> read_table_csv(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        std::string t = trim(line);
        if (t.empty() || (rows.empty() && t == "a,x,y,z")) continue;
        rows.push_back(parse_table_row(t, n));
    }
    return rows;
}

inline std::vector<TableRow> table1() {
    std::istringstream in{std::string(kTable1Csv)};
    return read_table_csv(in);
}

struct RowFailure {
    std::size_t index;  // 1-based
    TableRow row;
    std::string reason;
};

struct TableReport {
    std::size_t checked = 0;
    std::vector<RowFailure> failures;

    bool ok() const { return failures.empty(); }
};

inline TableReport verify_table(const std::vector<TableRow>& rows) {
    TableReport report;
    for (const auto& r : rows) {
        ++report.checked;
        std::string why;
        if (r.x.sign() <= 0 || r.y.sign() <= 0 || r.z.sign() <= 0) why = "non-positive component";
        else if (Rational v = r.value(); v != Rational(r.a))
            why = "value " + v.to_string() + " != " + std::to_string(r.a);
        if (!why.empty()) report.failures.push_back({report.checked, r, why});
    }
    return report;
}

inline std::string to_string(const TableReport& r) {
    std::string out = std::to_string(r.checked) + " rows, " + std::to_string(r.failures.size()) + " failed\n";
    for (const auto& f : r.failures)
        out += "row " + std::to_string(f.index) + " (" + to_csv(f.row) + "): " + f.reason + "\n";
    return out;
}

}  // namespace xyzfam
