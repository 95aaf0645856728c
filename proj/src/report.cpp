#include "frobprimes/report.hpp"

#include <cinttypes>
#include <cstdio>

#include "frobprimes/errors.hpp"
#include "frobprimes/util.hpp"

namespace frobprimes {

namespace {

std::string value_text(const Witness::Value& v)
{
    if (std::holds_alternative<std::int64_t>(v))
        return std::to_string(std::get<std::int64_t>(v));
    return format_real(std::get<double>(v));
}

std::string witness_json(const Witness& w)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : w.fields()) {
        if (!first)
            out += ',';
        first = false;
        out += '"';
        out += key;
        out += "\":";
        out += value_text(value);
    }
    out += '}';
    return out;
}

std::string witness_compact(const Witness& w)
{
    std::string out;
    for (const auto& [key, value] : w.fields()) {
        if (!out.empty())
            out += ';';
        out += key;
        out += '=';
        out += value_text(value);
    }
    return out;
}

} // namespace

std::string to_json(const CheckReport& r)
{
    std::string out = "{\"check_id\":\"" + r.check_id + "\"";
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += ",\"relation\":\"" + r.relation + "\"";
    out += ",\"threshold\":" + format_real(r.threshold);
    out += ",\"extremal_value\":" + format_real(r.extremal_value);
    out += ",\"witness\":" + witness_json(r.witness);
    out += ",\"samples_checked\":" + std::to_string(r.samples_checked);
    out += ",\"elapsed_ms\":" + std::to_string(r.elapsed_ms);
    out += '}';
    return out;
}

std::string to_csv_row(const CheckReport& r)
{
    std::string out = r.check_id;
    out += r.pass ? ",true," : ",false,";
    out += r.relation;
    out += ',' + format_real(r.threshold);
    out += ',' + format_real(r.extremal_value);
    out += ',' + witness_compact(r.witness);
    out += ',' + std::to_string(r.samples_checked);
    out += ',' + std::to_string(r.elapsed_ms);
    return out;
}

std::string to_text_line(const CheckReport& r)
{
    char head[96];
    std::snprintf(head, sizeof(head), "%-22s %s", r.check_id.c_str(),
                  r.pass ? "PASS" : "FAIL");
    std::string out = head;
    out += "  extremal=" + format_real(r.extremal_value);
    out += "  threshold=" + format_real(r.threshold);
    out += " (" + r.relation + ")";
    std::string w = witness_compact(r.witness);
    if (!w.empty())
        out += "  witness " + w;
    out += "  [" + std::to_string(r.samples_checked) + " samples, " +
           std::to_string(r.elapsed_ms) + " ms]";
    return out;
}

bool relation_holds(double lhs, std::string_view relation, double rhs)
{
    if (relation == "<")
        return lhs < rhs;
    if (relation == ">")
        return lhs > rhs;
    if (relation == "<=")
        return lhs <= rhs;
    if (relation == ">=")
        return lhs >= rhs;
    raise(errc::bad_argument, "unknown relation: " + std::string(relation));
}

} // namespace frobprimes
