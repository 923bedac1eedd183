#include "iaa/report.hpp"

#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

namespace iaa {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed4(double v) {
    if (v == 0.0)
        v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// nlohmann prints doubles with shortest round-trip notation; reports pin a
// fixed 4-decimal rendering instead, so serialization walks the tree itself.
void dump_fixed(const ordered_json& j, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case ordered_json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += pad_in;
            out += ordered_json(it.key()).dump();
            out += ": ";
            dump_fixed(it.value(), out, indent + 1);
            if (i + 1 < j.size())
                out += ",";
            out += "\n";
        }
        out += pad + "}";
        return;
    }
    case ordered_json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (size_t i = 0; i < j.size(); ++i) {
            out += pad_in;
            dump_fixed(j[i], out, indent + 1);
            if (i + 1 < j.size())
                out += ",";
            out += "\n";
        }
        out += pad + "]";
        return;
    }
    case ordered_json::value_t::number_float:
        out += fixed4(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

ordered_json interval_json(const Interval& iv) {
    return ordered_json::array({iv.lo, iv.hi});
}

ordered_json optional_interval_json(const std::optional<Interval>& iv) {
    return iv ? interval_json(*iv) : ordered_json(nullptr);
}

ordered_json optional_double_json(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json per_level_json(const std::vector<LevelSimilarity>& levels) {
    ordered_json arr = ordered_json::array();
    for (const LevelSimilarity& l : levels) {
        ordered_json e;
        e["level"] = l.level;
        e["weight"] = l.weight;
        e["similarity"] = l.similarity;
        arr.push_back(std::move(e));
    }
    return arr;
}

TermReport build_term_report(
    const std::string& term,
    const std::map<std::string, std::vector<Interval>>& by_group,
    const RunConfig& config) {
    TermReport report;
    report.term = term;

    std::vector<Type1FuzzySet> group_sets;
    for (const auto& [group, intervals] : by_group) {
        Type1FuzzySet set = build_t1(intervals);
        GroupReport gr;
        gr.group = group;
        gr.n_intervals = static_cast<int>(intervals.size());
        gr.t1 = config.mode == Mode::discretized
                    ? gamma_t1_discretized(set, config.scale,
                                           effective_step(config))
                    : gamma_t1(set);
        report.groups.push_back(std::move(gr));
        group_sets.push_back(std::move(set));
    }

    const ZGT2FuzzySet gt2 = build_zgt2(group_sets);
    report.intergroup = config.mode == Mode::discretized
                            ? gamma_gt2_discretized(gt2, config.scale,
                                                    effective_step(config))
                            : gamma_gt2(gt2);
    if (group_sets.size() == 1)
        report.flags.push_back("degenerate: single group");
    return report;
}

std::map<std::string, std::map<std::string, std::vector<Interval>>>
group_records(const SurveyDataset& dataset) {
    std::map<std::string, std::map<std::string, std::vector<Interval>>> terms;
    for (const SurveyRecord& r : dataset.records)
        terms[r.term][r.group].push_back(r.interval);
    return terms;
}

} // namespace

std::vector<TermReport> build_reports(const SurveyDataset& dataset,
                                      const RunConfig& config) {
    if (dataset.records.empty())
        throw validation_error("build_reports: dataset has no records");
    if (config.mode == Mode::discretized && !(config.step > 0.0))
        throw validation_error(
            "build_reports: discretized mode needs a positive step");

    const auto terms = group_records(dataset);
    std::vector<const std::string*> order;
    order.reserve(terms.size());
    for (const auto& [term, _] : terms)
        order.push_back(&term);

    std::vector<TermReport> reports(terms.size());
    auto worker = [&](size_t idx) {
        reports[idx] =
            build_term_report(*order[idx], terms.at(*order[idx]), config);
    };

    if (config.threads > 1 && terms.size() > 1) {
        std::vector<std::future<void>> futures;
        futures.reserve(terms.size());
        for (size_t i = 0; i < terms.size(); ++i)
            futures.push_back(std::async(std::launch::async, worker, i));
        for (auto& f : futures)
            f.get(); // rethrows worker exceptions
    } else {
        for (size_t i = 0; i < terms.size(); ++i)
            worker(i);
    }
    return reports;
}

std::string render_report_json(const std::vector<TermReport>& reports,
                               const RunConfig& config) {
    ordered_json root = ordered_json::array();
    for (const TermReport& tr : reports) {
        ordered_json t;
        t["term"] = tr.term;
        ordered_json groups = ordered_json::array();
        for (const GroupReport& gr : tr.groups) {
            ordered_json g;
            g["group"] = gr.group;
            g["gamma_t1"] = gr.t1.gamma;
            g["n_intervals"] = gr.n_intervals;
            g["per_level"] = per_level_json(gr.t1.per_level);
            groups.push_back(std::move(g));
        }
        t["groups"] = std::move(groups);
        t["gamma_intergroup"] = tr.intergroup.gamma;
        t["per_level"] = per_level_json(tr.intergroup.per_level);
        t["support"] = optional_interval_json(tr.intergroup.support);
        t["centroid"] = optional_double_json(tr.intergroup.centroid);
        t["height"] = tr.intergroup.height;
        t["mode"] = config.mode == Mode::discretized ? "discretized" : "exact";
        t["step"] = config.mode == Mode::discretized
                        ? ordered_json(config.step)
                        : ordered_json(nullptr);
        ordered_json slices = ordered_json::array();
        for (const ZSliceStats& zs : tr.intergroup.zslice_stats) {
            ordered_json s;
            s["level"] = zs.level;
            s["support"] = optional_interval_json(zs.support);
            s["centroid"] = optional_double_json(zs.centroid);
            s["height"] = zs.height;
            slices.push_back(std::move(s));
        }
        t["zslice_stats"] = std::move(slices);
        t["flags"] = tr.flags;
        root.push_back(std::move(t));
    }
    std::string out;
    dump_fixed(root, out, 0);
    out += "\n";
    return out;
}

std::string render_report_csv(const std::vector<TermReport>& reports,
                              const RunConfig& config) {
    const std::string mode =
        config.mode == Mode::discretized ? "discretized" : "exact";
    const std::string step =
        config.mode == Mode::discretized ? fixed4(config.step) : "";
    std::ostringstream out;
    out << "record,term,group,level,weight,similarity,gamma,n_intervals,"
           "support_lo,support_hi,centroid,height,mode,step\n";
    for (const TermReport& tr : reports) {
        const AgreementReport& ig = tr.intergroup;
        out << "term," << tr.term << ",,,,," << fixed4(ig.gamma) << ",,"
            << (ig.support ? fixed4(ig.support->lo) : "") << ","
            << (ig.support ? fixed4(ig.support->hi) : "") << ","
            << (ig.centroid ? fixed4(*ig.centroid) : "") << ","
            << fixed4(ig.height) << "," << mode << "," << step << "\n";
        for (const GroupReport& gr : tr.groups)
            out << "group," << tr.term << "," << gr.group << ",,,,"
                << fixed4(gr.t1.gamma) << "," << gr.n_intervals
                << ",,,,," << mode << "," << step << "\n";
        for (const LevelSimilarity& l : ig.per_level)
            out << "level," << tr.term << ",," << l.level << ","
                << fixed4(l.weight) << "," << fixed4(l.similarity)
                << ",,,,,,," << mode << "," << step << "\n";
    }
    return out.str();
}

std::string run_report(const SurveyDataset& dataset, const RunConfig& config) {
    const std::vector<TermReport> reports = build_reports(dataset, config);
    return config.format == OutputFormat::csv
               ? render_report_csv(reports, config)
               : render_report_json(reports, config);
}

std::string export_samples(const SurveyDataset& dataset,
                           const RunConfig& config) {
    if (dataset.records.empty())
        throw validation_error("export_samples: dataset has no records");
    const double step = effective_step(config);
    if (!(step > 0.0))
        throw validation_error("export_samples: step must be positive");

    std::ostringstream out;
    out << "term,series,x,membership\n";
    auto emit = [&](const std::string& term, const std::string& series,
                    const StepFunction& f) {
        for (const Sample& s :
             sample(f, config.scale.lo, config.scale.hi, step)) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "%.6f,%.6f", s.x, s.membership);
            out << term << "," << series << "," << buf << "\n";
        }
    };
    for (const auto& [term, by_group] : group_records(dataset)) {
        std::vector<Type1FuzzySet> group_sets;
        for (const auto& [group, intervals] : by_group) {
            Type1FuzzySet set = build_t1(intervals);
            emit(term, "group:" + group, set.mf);
            group_sets.push_back(std::move(set));
        }
        const ZGT2FuzzySet gt2 = build_zgt2(group_sets);
        for (int j = 1; j <= gt2.num_zslices(); ++j)
            emit(term, "zslice:" + std::to_string(j), gt2.zslice(j).mf);
    }
    return out.str();
}

} // namespace iaa
