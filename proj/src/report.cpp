#include "hopf2x/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hopf2x {

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

void Report::pass(std::string id, std::string anchor, std::string note)
{
    records_.push_back({std::move(id), std::move(anchor), Status::pass, std::nullopt, std::move(note)});
}

void Report::fail(std::string id, std::string anchor, Witness w, std::string note)
{
    records_.push_back({std::move(id), std::move(anchor), Status::fail, std::move(w), std::move(note)});
}

void Report::skip(std::string id, std::string anchor, std::string reason)
{
    records_.push_back({std::move(id), std::move(anchor), Status::skipped, std::nullopt, std::move(reason)});
}

void Report::check(std::string id, std::string anchor, std::optional<Witness> w, std::string note)
{
    if (w)
        fail(std::move(id), std::move(anchor), std::move(*w), std::move(note));
    else
        pass(std::move(id), std::move(anchor), std::move(note));
}

void Report::add(CheckRecord r) { records_.push_back(std::move(r)); }

void Report::merge(const Report& other, std::string_view prefix)
{
    for (auto r : other.records_) {
        if (!prefix.empty()) r.id = std::string(prefix) + "/" + r.id;
        records_.push_back(std::move(r));
    }
}

const CheckRecord* Report::find(std::string_view id) const
{
    for (const auto& r : records_)
        if (r.id == id) return &r;
    return nullptr;
}

bool Report::ok() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const
{
    std::size_t n = 0;
    for (const auto& r : records_)
        if (r.status == s) ++n;
    return n;
}

std::string emit_text(const Report& r)
{
    std::ostringstream os;
    for (const auto& rec : r.records()) {
        os << status_name(rec.status) << "  " << rec.id << "  [" << rec.anchor << "]";
        if (!rec.note.empty()) os << "  " << rec.note;
        os << "\n";
        if (rec.witness) {
            os << "      at  " << rec.witness->tuple << "\n";
            os << "      lhs " << rec.witness->lhs << "\n";
            os << "      rhs " << rec.witness->rhs << "\n";
        }
    }
    os << "summary: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
       << r.count(Status::skipped) << " skipped\n";
    return os.str();
}

std::string emit_json(const Report& r)
{
    nlohmann::ordered_json out;
    out["schema"] = "hopf2x/1";
    auto& recs = out["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.records()) {
        nlohmann::ordered_json j;
        j["id"] = rec.id;
        j["anchor"] = rec.anchor;
        j["status"] = status_name(rec.status);
        if (!rec.note.empty()) j["note"] = rec.note;
        if (rec.witness)
            j["witness"] = {{"tuple", rec.witness->tuple}, {"lhs", rec.witness->lhs}, {"rhs", rec.witness->rhs}};
        recs.push_back(std::move(j));
    }
    out["summary"] = {{"pass", r.count(Status::pass)},
                      {"fail", r.count(Status::fail)},
                      {"skipped", r.count(Status::skipped)}};
    return out.dump(2) + "\n";
}

int exit_code(const Report& r) { return r.ok() ? 0 : 1; }

}  // namespace hopf2x
