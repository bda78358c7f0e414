#include "report.hpp"

#include <sstream>

#include "json.hpp"
#include "lexikit/errors.hpp"

namespace lexikit::cli {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw Error("unknown format '" + text + "'");
}

std::string profile_column_key(const std::vector<uint8_t>& column) {
    std::string key;
    key.reserve(column.size());
    for (uint8_t e : column) {
        key.push_back(e < 10 ? static_cast<char>('0' + e) : static_cast<char>('a' + e - 10));
    }
    return key;
}

namespace {

ordered_json spec_json(const SpecEcho& spec) {
    return ordered_json{
        {"p", spec.p}, {"d", spec.d}, {"basis", spec.basis},
        {"variant", spec.variant}, {"k", spec.k},
    };
}

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["schema"] = "lexikit-report-v1";
    j["command"] = r.command;
    j["spec"] = spec_json(r.spec);
    if (r.words) j["words"] = *r.words;
    if (r.generators) j["generators"] = *r.generators;
    if (r.support) j["support"] = *r.support;
    if (r.params) {
        j["params"] = ordered_json{{"n", r.params->n}, {"k", r.params->k}, {"dmin", r.params->dmin}};
    }
    if (r.linear) j["linear"] = *r.linear;
    if (r.lindim) {
        ordered_json l{{"kind", r.lindim->finite ? "finite" : "at_least"}, {"k", r.lindim->k}};
        if (r.lindim->witness) {
            l["witness"] = ordered_json{{"a", r.lindim->witness->a},
                                        {"word", r.lindim->witness->word},
                                        {"combination", r.lindim->witness->combination}};
        }
        j["lindim"] = l;
    }
    if (r.griesmer) j["griesmer"] = ordered_json{{"value", r.griesmer->value}, {"gap", r.griesmer->gap}};
    if (r.profile) {
        ordered_json counts = ordered_json::object();
        for (const auto& [key, count] : r.profile->counts) counts[key] = count;
        j["profile"] = ordered_json{{"ambient", r.profile->ambient}, {"counts", counts}};
    }
    if (r.pi) {
        j["pi"] = ordered_json{{"q", r.pi->q}, {"r", r.pi->r}, {"d_prime", r.pi->d_prime},
                               {"distributed", r.pi->distributed}};
    }
    if (r.weights) j["weights"] = *r.weights;
    if (r.family) j["family"] = ordered_json{{"name", r.family->name}, {"ok", r.family->ok}};
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    return j;
}

void csv_line(std::ostringstream& out, const std::string& key, const std::string& value) {
    out << key << ',' << value << '\n';
}

template <typename T>
std::string joined(const std::vector<T>& values, char sep = ';') {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        if constexpr (std::is_same_v<T, std::string>) {
            out << values[i];
        } else {
            out << +values[i];
        }
    }
    return out.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream out;
    out << "key,value\n";
    csv_line(out, "command", r.command);
    csv_line(out, "p", std::to_string(r.spec.p));
    csv_line(out, "d", std::to_string(r.spec.d));
    csv_line(out, "basis", r.spec.basis);
    csv_line(out, "variant", r.spec.variant);
    csv_line(out, "k", std::to_string(r.spec.k));
    if (r.words) csv_line(out, "words", joined(*r.words));
    if (r.generators) csv_line(out, "generators", joined(*r.generators));
    if (r.support) csv_line(out, "support", joined(*r.support));
    if (r.params) {
        csv_line(out, "n", std::to_string(r.params->n));
        csv_line(out, "dim", std::to_string(r.params->k));
        csv_line(out, "dmin", std::to_string(r.params->dmin));
    }
    if (r.linear) csv_line(out, "linear", *r.linear ? "true" : "false");
    if (r.lindim) {
        csv_line(out, "lindim_kind", r.lindim->finite ? "finite" : "at_least");
        csv_line(out, "lindim_k", std::to_string(r.lindim->k));
        if (r.lindim->witness) {
            csv_line(out, "witness_a", std::to_string(r.lindim->witness->a));
            csv_line(out, "witness_word", r.lindim->witness->word);
            csv_line(out, "witness_combination", r.lindim->witness->combination);
        }
    }
    if (r.griesmer) {
        csv_line(out, "griesmer_value", std::to_string(r.griesmer->value));
        csv_line(out, "griesmer_gap", std::to_string(r.griesmer->gap));
    }
    if (r.profile) {
        for (const auto& [key, count] : r.profile->counts) {
            csv_line(out, "cdn_" + key, std::to_string(count));
        }
    }
    if (r.pi) {
        csv_line(out, "pi_q", std::to_string(r.pi->q));
        csv_line(out, "pi_r", std::to_string(r.pi->r));
        csv_line(out, "pi_d_prime", std::to_string(r.pi->d_prime));
        csv_line(out, "pi_distributed", r.pi->distributed ? "true" : "false");
    }
    if (r.weights) csv_line(out, "weights", joined(*r.weights));
    if (r.family) {
        csv_line(out, "family", r.family->name);
        csv_line(out, "family_ok", r.family->ok ? "true" : "false");
    }
    if (r.timing_ms) csv_line(out, "timing_ms", std::to_string(*r.timing_ms));
    return out.str();
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << r.command << " p=" << r.spec.p << " d=" << r.spec.d << " basis=" << r.spec.basis
        << " variant=" << r.spec.variant << " k=" << r.spec.k << '\n';
    if (r.support) out << "support: " << joined(*r.support, ' ') << '\n';
    if (r.words) {
        out << "words (" << r.words->size() << "):\n";
        for (const auto& w : *r.words) out << "  " << w << '\n';
    }
    if (r.generators) {
        out << "generators:\n";
        for (const auto& g : *r.generators) out << "  " << g << '\n';
    }
    if (r.params) {
        out << "params: [" << r.params->n << ", " << r.params->k << ", " << r.params->dmin
            << "]\n";
    }
    if (r.linear) out << "linear: " << (*r.linear ? "yes" : "no") << '\n';
    if (r.lindim) {
        if (r.lindim->finite) {
            out << "max linear k: " << r.lindim->k << '\n';
            if (r.lindim->witness) {
                out << "witness: a=" << r.lindim->witness->a << " word=" << r.lindim->witness->word
                    << " combination=" << r.lindim->witness->combination << '\n';
            }
        } else {
            out << "max linear k: at least " << r.lindim->k << '\n';
        }
    }
    if (r.griesmer) {
        out << "griesmer: " << r.griesmer->value << " (gap " << r.griesmer->gap << ")\n";
    }
    if (r.profile) {
        out << "column counts:\n";
        for (const auto& [key, count] : r.profile->counts) {
            out << "  " << key << ": " << count << '\n';
        }
    }
    if (r.pi) {
        out << "pi: q=" << r.pi->q << " r=" << r.pi->r << " d'=" << r.pi->d_prime
            << " distributed=" << (r.pi->distributed ? "yes" : "no") << '\n';
    }
    if (r.weights) {
        out << "weights:";
        for (size_t w = 0; w < r.weights->size(); ++w) {
            if ((*r.weights)[w]) out << " A" << w << "=" << (*r.weights)[w];
        }
        out << '\n';
    }
    if (r.family) {
        out << "family " << r.family->name << ": " << (r.family->ok ? "confirmed" : "MISMATCH")
            << '\n';
    }
    if (r.timing_ms) out << "time: " << *r.timing_ms << " ms\n";
    return out.str();
}

}  // namespace

std::string Report::render(Format format) const {
    switch (format) {
        case Format::Json: return to_json(*this).dump(2) + "\n";
        case Format::Csv: return render_csv(*this);
        case Format::Text: return render_text(*this);
    }
    return {};
}

bool TableReport::any_failed() const {
    for (const TableRow& row : rows) {
        if (row.verdict == "error") return true;
    }
    return false;
}

std::string TableReport::render(Format format) const {
    if (format == Format::Json) {
        ordered_json j;
        j["schema"] = "lexikit-table-v1";
        j["name"] = name;
        j["rows"] = ordered_json::array();
        for (const TableRow& row : rows) {
            ordered_json r;
            r["basis"] = row.basis;
            if (row.xi) r["xi"] = *row.xi;
            if (row.eta) r["eta"] = *row.eta;
            r["verdict"] = row.verdict;
            if (row.k) r["k"] = *row.k;
            if (!row.error.empty()) r["error"] = row.error;
            j["rows"].push_back(r);
        }
        if (timing_ms) j["timing_ms"] = *timing_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        const auto quoted = [](const std::string& field) {
            return field.find(',') == std::string::npos ? field : '"' + field + '"';
        };
        out << "basis,xi,eta,verdict,k,error\n";
        for (const TableRow& row : rows) {
            out << quoted(row.basis) << ',';
            if (row.xi) out << *row.xi;
            out << ',';
            if (row.eta) out << *row.eta;
            out << ',' << row.verdict << ',';
            if (row.k) out << *row.k;
            out << ',' << row.error << '\n';
        }
        return out.str();
    }
    out << "table " << name << '\n';
    for (const TableRow& row : rows) {
        out << "  " << row.basis << ": ";
        if (row.verdict == "error") {
            out << "error (" << row.error << ")";
        } else {
            if (row.verdict == "at_least") out << ">=";
            out << *row.k;
        }
        out << '\n';
    }
    if (timing_ms) out << "time: " << *timing_ms << " ms\n";
    return out.str();
}

}  // namespace lexikit::cli
