#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopf2x {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s);

struct Witness {
    std::string tuple;
    std::string lhs;
    std::string rhs;
};

struct CheckRecord {
    std::string id;
    std::string anchor;
    Status status = Status::pass;
    std::optional<Witness> witness;  // present iff status == fail
    std::string note;
};

// Ordered list of check verdicts. Records keep insertion order, which every
// producer makes deterministic.
class Report {
public:
    void pass(std::string id, std::string anchor, std::string note = {});
    void fail(std::string id, std::string anchor, Witness w, std::string note = {});
    void skip(std::string id, std::string anchor, std::string reason);
    // pass when w is empty, fail otherwise
    void check(std::string id, std::string anchor, std::optional<Witness> w, std::string note = {});
    void add(CheckRecord r);
    void merge(const Report& other, std::string_view prefix = {});

    const std::vector<CheckRecord>& records() const { return records_; }
    const CheckRecord* find(std::string_view id) const;
    bool ok() const;
    std::size_t count(Status s) const;
    std::size_t size() const { return records_.size(); }

private:
    std::vector<CheckRecord> records_;
};

std::string emit_text(const Report& r);
std::string emit_json(const Report& r);
int exit_code(const Report& r);

}  // namespace hopf2x
