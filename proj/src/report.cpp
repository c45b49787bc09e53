#include "codim1/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace codim1 {

std::string render_text(const Report& r) {
    std::string out;
    for (const auto& t : r.tasks) {
        if (!out.empty()) out += "\n";
        out += "task " + t.kind + " " + t.subject + "\n";
        out += "  verdict: " + t.verdict + "\n";
        if (t.has_interval) {
            if (t.lower == t.upper)
                out += "  supht(" + t.subject + ") = " + std::to_string(t.lower) + "\n";
            else
                out += "  supht(" + t.subject + ") in [" + std::to_string(t.lower) + ", " +
                       std::to_string(t.upper) + "]\n";
            if (!t.lower_tag.empty()) out += "  lower bound via: " + t.lower_tag + "\n";
            if (!t.upper_tag.empty()) out += "  upper bound via: " + t.upper_tag + "\n";
        }
        if (!t.verdict_tag.empty()) out += "  decided by: " + t.verdict_tag + "\n";
        for (const auto& e : t.evidence) out += "  evidence: " + e + "\n";
        for (const auto& a : t.assertions) out += "  assertion: " + a + "\n";
        for (const auto& n : t.notes) out += "  note: " + n + "\n";
        if (!t.citations.empty()) {
            out += "  citations:";
            for (const auto& c : t.citations) out += " " + c;
            out += "\n";
        }
        if (t.seconds) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "  time: %.3fs\n", *t.seconds);
            out += buf;
        }
    }
    return out;
}

std::string render_json_lines(const Report& r) {
    std::string out;
    for (const auto& t : r.tasks) {
        nlohmann::ordered_json j;
        j["task"] = t.kind;
        j["subject"] = t.subject;
        j["verdict"] = t.verdict;
        if (t.has_interval) {
            j["superheight"] = {t.lower, t.upper};
            j["lower_tag"] = t.lower_tag;
            j["upper_tag"] = t.upper_tag;
        }
        if (!t.verdict_tag.empty()) j["verdict_tag"] = t.verdict_tag;
        j["evidence"] = t.evidence;
        j["assertions"] = t.assertions;
        j["citations"] = t.citations;
        j["notes"] = t.notes;
        if (t.seconds) j["seconds"] = *t.seconds;
        out += j.dump();
        out += "\n";
    }
    return out;
}

} // namespace codim1
