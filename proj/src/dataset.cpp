#include "iaa/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace iaa {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !s.empty();
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void strip_bom(std::string& line) {
    if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' &&
        line[2] == '\xBF')
        line.erase(0, 3);
}

} // namespace

double effective_step(const RunConfig& config) {
    if (config.mode == Mode::discretized && config.step > 0.0)
        return config.step;
    return 0.01 * config.scale.length();
}

SurveyDataset ingest_csv(std::istream& in, const RunConfig& config,
                         std::string_view source_name,
                         std::vector<std::string>* warnings) {
    SurveyDataset dataset;
    dataset.scale = config.scale;

    std::vector<std::string> problems;
    auto report = [&](int line_no, const std::string& what) {
        std::ostringstream msg;
        msg << source_name << ":" << line_no << ": " << what;
        if (config.skip_invalid && warnings)
            warnings->push_back(msg.str());
        else if (!config.skip_invalid)
            problems.push_back(msg.str());
    };

    std::string line;
    int line_no = 0;
    bool header_seen = false;
    bool any_data_row = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1)
            strip_bom(line);
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        if (!header_seen) {
            if (stripped != kCsvHeader)
                throw validation_error(std::string(source_name) + ":" +
                                       std::to_string(line_no) +
                                       ": expected header '" +
                                       std::string(kCsvHeader) + "'");
            header_seen = true;
            continue;
        }
        any_data_row = true;
        const std::vector<std::string> fields = split_fields(stripped);
        if (fields.size() != 5) {
            report(line_no, "expected 5 comma-separated fields, got " +
                                std::to_string(fields.size()));
            continue;
        }
        const std::string& group = fields[0];
        const std::string& respondent = fields[1];
        const std::string& term = fields[2];
        if (group.empty() || respondent.empty() || term.empty()) {
            report(line_no, "group, respondent and term must be non-empty");
            continue;
        }
        double lo = 0.0;
        double hi = 0.0;
        if (!parse_double(fields[3], lo) || !parse_double(fields[4], hi)) {
            report(line_no, "endpoints must be numeric, got '" + fields[3] +
                                "' and '" + fields[4] + "'");
            continue;
        }
        if (lo > hi) {
            report(line_no, "interval is inverted (lo " + fields[3] +
                                " > hi " + fields[4] + ")");
            continue;
        }
        if (lo < config.scale.lo || hi > config.scale.hi) {
            report(line_no, "interval [" + fields[3] + "," + fields[4] +
                                "] lies outside the scale [" +
                                format_double(config.scale.lo) + "," +
                                format_double(config.scale.hi) + "]");
            continue;
        }
        dataset.records.push_back(
            SurveyRecord{group, respondent, term, Interval(lo, hi)});
    }

    if (!header_seen)
        throw validation_error(std::string(source_name) +
                               ": missing header line '" +
                               std::string(kCsvHeader) + "'");
    if (!problems.empty()) {
        std::ostringstream all;
        for (size_t i = 0; i < problems.size(); ++i) {
            if (i)
                all << "\n";
            all << problems[i];
        }
        throw validation_error(all.str());
    }
    if (!any_data_row)
        throw validation_error(std::string(source_name) + ": no records");
    if (dataset.records.empty())
        throw validation_error(std::string(source_name) +
                               ": no valid records remain");
    return dataset;
}

SurveyDataset ingest_csv(const std::filesystem::path& path,
                         const RunConfig& config,
                         std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path.string() + "' for reading");
    return ingest_csv(in, config, path.string(), warnings);
}

std::string write_csv(const SurveyDataset& dataset) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const SurveyRecord& r : dataset.records)
        out << r.group << "," << r.respondent << "," << r.term << ","
            << format_double(r.interval.lo) << ","
            << format_double(r.interval.hi) << "\n";
    return out.str();
}

} // namespace iaa
