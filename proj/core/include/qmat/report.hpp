#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qmat {

// Machine-readable run reports.  Every command appends rows in a canonical
// order (degree first, then partition or other secondary key), so a rerun
// with the same configuration emits byte-identical output.  JSON format
// prints one object per line; table format prints the same fields as
// aligned key=value columns for reading in a terminal.

class Report {
public:
    using Row = nlohmann::ordered_json;

    void add(Row row, bool ok) {
        if (!ok) ++failures_;
        row["status"] = ok ? "ok" : "fail";
        rows_.push_back(std::move(row));
    }

    void add_ok(Row row) { add(std::move(row), true); }

    int failures() const { return failures_; }
    bool all_ok() const { return failures_ == 0; }
    const std::vector<Row>& rows() const { return rows_; }

    // Exit code contract: 0 all checks pass, 2 some mathematical check
    // failed.  Operational failures (bad files, bad flags) never reach
    // this point; the CLI maps those to exit code 1.
    int exit_code() const { return failures_ == 0 ? 0 : 2; }

    void render_json(std::ostream& out) const {
        for (const Row& r : rows_) out << r.dump() << "\n";
        nlohmann::ordered_json summary;
        summary["summary"] = {{"rows", rows_.size()},
                              {"failed", failures_},
                              {"status", failures_ == 0 ? "ok" : "fail"}};
        out << summary.dump() << "\n";
    }

    void render_table(std::ostream& out) const {
        for (const Row& r : rows_) {
            bool first = true;
            for (const auto& item : r.items()) {
                if (!first) out << "  ";
                first = false;
                out << item.key() << "=" << scalar_text(item.value());
            }
            out << "\n";
        }
        out << (failures_ == 0 ? "all checks passed" : "FAILED") << " ("
            << rows_.size() << " rows, " << failures_ << " failed)\n";
    }

    void render(std::ostream& out, const std::string& format) const {
        if (format == "json")
            render_json(out);
        else
            render_table(out);
    }

private:
    static std::string scalar_text(const nlohmann::ordered_json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    std::vector<Row> rows_;
    int failures_ = 0;
};

}  // namespace qmat
