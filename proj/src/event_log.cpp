#include "collabnet/event_log.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace collabnet {

using nlohmann::json;

const char* to_string(Field f) { return f == Field::CC ? "CC" : "ASSIGNEE"; }

namespace {

// Returns an error message, or empty on success.
std::string parse_line(const std::string& line, ChangeEvent& ev) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return "not a valid record object";
    for (const char* key : {"bug_id", "timestamp", "actor_id", "field", "added_user_ids"})
        if (!j.contains(key)) return std::string("missing key '") + key + "'";

    if (!j["bug_id"].is_string() || !j["timestamp"].is_string() || !j["actor_id"].is_string())
        return "bug_id, timestamp and actor_id must be strings";
    ev.bug_id = j["bug_id"].get<std::string>();
    ev.actor_id = j["actor_id"].get<std::string>();
    if (ev.actor_id.empty()) return "empty actor_id";

    auto ts = parse_instant(j["timestamp"].get<std::string>());
    if (!ts) return "invalid timestamp (expected YYYY-MM-DDTHH:MM:SSZ)";
    ev.timestamp = *ts;

    if (!j["field"].is_string()) return "field must be a string";
    std::string field = j["field"].get<std::string>();
    if (field == "CC") {
        ev.field = Field::CC;
    } else if (field == "ASSIGNEE") {
        ev.field = Field::ASSIGNEE;
    } else {
        return "unsupported field '" + field + "'";
    }

    if (!j["added_user_ids"].is_array()) return "added_user_ids must be an array";
    ev.added_user_ids.clear();
    for (const auto& u : j["added_user_ids"]) {
        if (!u.is_string() || u.get<std::string>().empty())
            return "added_user_ids entries must be non-empty strings";
        ev.added_user_ids.push_back(u.get<std::string>());
    }
    if (ev.added_user_ids.empty()) return "added_user_ids is empty";
    return {};
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

}  // namespace

ParseResult parse_event_log(std::istream& in, bool strict) {
    ParseResult result;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (is_blank(line)) continue;
        ChangeEvent ev;
        std::string err = parse_line(line, ev);
        if (err.empty()) {
            result.events.push_back(std::move(ev));
        } else {
            result.diagnostics.push_back({line_number, std::move(err)});
            if (strict) {
                result.fatal = true;
                return result;
            }
        }
    }
    return result;
}

EventDataset derive_edges(const std::vector<ChangeEvent>& events, FieldFilter filter) {
    EventDataset ds;
    ds.source_events = events.size();
    for (const auto& ev : events) {
        bool keep = filter == FieldFilter::Both ||
                    (filter == FieldFilter::CcOnly && ev.field == Field::CC) ||
                    (filter == FieldFilter::AssigneeOnly && ev.field == Field::ASSIGNEE);
        if (!keep) {
            ds.filtered_out += ev.added_user_ids.size();
            continue;
        }
        for (const auto& target : ev.added_user_ids) {
            if (target == ev.actor_id) {
                ++ds.self_loops_dropped;
                continue;
            }
            ds.edges.push_back({ev.timestamp, ev.actor_id, target, ev.field, ev.bug_id});
        }
    }
    std::stable_sort(ds.edges.begin(), ds.edges.end(),
                     [](const TemporalEdge& a, const TemporalEdge& b) {
                         return a.timestamp < b.timestamp;
                     });
    if (!ds.edges.empty()) {
        ds.first_day = day_of(ds.edges.front().timestamp);
        ds.last_day = day_of(ds.edges.back().timestamp);
    }
    return ds;
}

namespace {

void write_record(std::ostream& out, const std::string& bug_id, Instant ts,
                  const std::string& actor, Field field,
                  const std::vector<std::string>& added) {
    json j;
    j["bug_id"] = bug_id;
    j["timestamp"] = format_instant(ts);
    j["actor_id"] = actor;
    j["field"] = to_string(field);
    j["added_user_ids"] = added;
    out << j.dump() << '\n';
}

}  // namespace

void write_events(std::ostream& out, const std::vector<ChangeEvent>& events) {
    for (const auto& ev : events)
        write_record(out, ev.bug_id, ev.timestamp, ev.actor_id, ev.field, ev.added_user_ids);
}

void write_dataset(std::ostream& out, const EventDataset& ds) {
    for (const auto& e : ds.edges)
        write_record(out, e.bug_id, e.timestamp, e.source_id, e.field, {e.target_id});
}

}  // namespace collabnet
