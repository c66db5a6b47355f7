#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "collabnet/time.hpp"

namespace collabnet {

enum class Field { CC, ASSIGNEE };

const char* to_string(Field f);

// Which interaction kinds enter the network.
enum class FieldFilter { Both, CcOnly, AssigneeOnly };

// One time-stamped field update mined from a bug report's change history.
struct ChangeEvent {
    std::string bug_id;
    Instant timestamp = 0;
    std::string actor_id;
    Field field = Field::CC;
    std::vector<std::string> added_user_ids;
};

// A directed, time-stamped actor -> added-user interaction.
struct TemporalEdge {
    Instant timestamp = 0;
    std::string source_id;
    std::string target_id;
    Field field = Field::CC;
    std::string bug_id;

    bool operator==(const TemporalEdge&) const = default;
};

struct EventDataset {
    std::vector<TemporalEdge> edges;  // ascending by timestamp, input order on ties
    Day first_day = 0;
    Day last_day = 0;
    std::size_t source_events = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t filtered_out = 0;

    bool empty() const { return edges.empty(); }
};

struct ParseDiagnostic {
    std::size_t line_number;  // 1-based
    std::string message;
};

struct ParseResult {
    std::vector<ChangeEvent> events;
    std::vector<ParseDiagnostic> diagnostics;
    bool fatal = false;  // strict mode tripped on a malformed line
};

// Parses the canonical line-delimited log: one JSON object per line with keys
// bug_id, timestamp, actor_id, field, added_user_ids. Malformed lines are
// reported with their line numbers and skipped; in strict mode the first
// malformed line aborts the parse (result.fatal set).
ParseResult parse_event_log(std::istream& in, bool strict = false);

// Expands each event into one edge per added user, drops self-interactions,
// applies the field filter, and sorts by timestamp (stable on ties).
EventDataset derive_edges(const std::vector<ChangeEvent>& events,
                          FieldFilter filter = FieldFilter::Both);

// Canonical-log serialization. One record per event / per edge respectively.
void write_events(std::ostream& out, const std::vector<ChangeEvent>& events);
void write_dataset(std::ostream& out, const EventDataset& ds);

}  // namespace collabnet
