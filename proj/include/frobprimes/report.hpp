#ifndef FROBPRIMES_REPORT_HPP
#define FROBPRIMES_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace frobprimes {

// A named record pinpointing where a check's extremum occurred, so any
// reported value can be re-run by hand (e.g. a=21, b=22 or u=2, k=1000).
class Witness {
public:
    using Value = std::variant<std::int64_t, double>;

    Witness& set(std::string key, std::int64_t v)
    {
        fields_.emplace_back(std::move(key), Value(v));
        return *this;
    }
    Witness& set(std::string key, std::uint64_t v)
    {
        return set(std::move(key), static_cast<std::int64_t>(v));
    }
    Witness& set(std::string key, int v)
    {
        return set(std::move(key), static_cast<std::int64_t>(v));
    }
    Witness& set(std::string key, double v)
    {
        fields_.emplace_back(std::move(key), Value(v));
        return *this;
    }

    const std::vector<std::pair<std::string, Value>>& fields() const
    {
        return fields_;
    }

    bool operator==(const Witness& other) const = default;

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

// Outcome of one verification check. `pass` is always the stated relation
// applied to extremal_value and threshold; no slack anywhere.
struct CheckReport {
    std::string check_id;
    bool pass = false;
    std::string relation; // "<", ">", "<=", ">="
    double threshold = 0.0;
    double extremal_value = 0.0;
    Witness witness;
    std::uint64_t samples_checked = 0;
    std::uint64_t elapsed_ms = 0;
};

inline constexpr std::string_view kReportCsvHeader =
    "check_id,pass,relation,threshold,extremal_value,witness,samples_checked,"
    "elapsed_ms";

std::string to_json(const CheckReport& report);
std::string to_csv_row(const CheckReport& report);
std::string to_text_line(const CheckReport& report);

// True when `lhs relation rhs` holds for one of "<", ">", "<=", ">=".
bool relation_holds(double lhs, std::string_view relation, double rhs);

} // namespace frobprimes

#endif
