#include "mbsb/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mbsb/errors.hpp"

namespace mbsb {

using nlohmann::json;

Format format_from_name(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw invalid_parameters("unknown format: " + name + " (expected csv or json)");
}

std::string format_double(double v) {
    std::array<char, 64> buf;
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), p);
}

namespace {

double parse_double(std::string_view s, std::size_t line) {
    double v = 0;
    auto first = s.data();
    auto last = s.data() + s.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    while (p != last && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (ec != std::errc{} || p != last)
        throw parse_error(line, "bad number: '" + std::string(s) + "'");
    if (!std::isfinite(v))
        throw parse_error(line, "non-finite coordinate: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

Point3 point_from_json(const json& j, std::size_t line) {
    if (!j.is_array() || j.size() != 3) throw parse_error(line, "point must be [x, y, z]");
    Point3 p{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (!p.finite()) throw parse_error(line, "non-finite coordinate");
    return p;
}

Dataset load_csv(std::istream& in) {
    Dataset ds;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    DatasetMeta meta;
    bool have_meta = false;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            auto eq = t.find('=');
            if (eq != std::string::npos) {
                std::string key = trim(std::string_view(t).substr(1, eq - 1));
                std::string val = trim(std::string_view(t).substr(eq + 1));
                have_meta = true;
                if (key == "name") meta.name = val;
                else if (key == "generator") meta.generator = val;
                else if (key == "seed") meta.seed = std::stoull(val);
                else meta.params[key] = parse_double(val, lineno);
            }
            continue;
        }
        if (!header_seen) {
            if (t != "label,x,y,z")
                throw parse_error(lineno, "expected header 'label,x,y,z', got '" + t + "'");
            header_seen = true;
            continue;
        }
        auto fields = split(t, ',');
        if (fields.size() != 4) throw parse_error(lineno, "expected 4 fields");
        std::string label = trim(fields[0]);
        Point3 p{parse_double(fields[1], lineno), parse_double(fields[2], lineno),
                 parse_double(fields[3], lineno)};
        if (label == "red") ds.red.push_back(p);
        else if (label == "blue") ds.blue.push_back(p);
        else throw parse_error(lineno, "label must be red or blue, got '" + label + "'");
    }
    if (!header_seen) throw parse_error(lineno, "missing header 'label,x,y,z'");
    if (have_meta) ds.meta = meta;
    return ds;
}

void save_csv(std::ostream& out, const Dataset& ds) {
    if (ds.meta) {
        if (!ds.meta->name.empty()) out << "# name=" << ds.meta->name << "\n";
        if (!ds.meta->generator.empty()) out << "# generator=" << ds.meta->generator << "\n";
        out << "# seed=" << ds.meta->seed << "\n";
        for (const auto& [k, v] : ds.meta->params) out << "# " << k << "=" << format_double(v) << "\n";
    }
    out << "label,x,y,z\n";
    for (const Point3& p : ds.red)
        out << "red," << format_double(p.x) << "," << format_double(p.y) << ","
            << format_double(p.z) << "\n";
    for (const Point3& p : ds.blue)
        out << "blue," << format_double(p.x) << "," << format_double(p.y) << ","
            << format_double(p.z) << "\n";
}

Dataset load_json(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error(0, e.what());
    }
    Dataset ds;
    if (!j.is_object() || !j.contains("red")) throw parse_error(0, "expected object with 'red'");
    for (const auto& e : j["red"]) ds.red.push_back(point_from_json(e, 0));
    if (j.contains("blue"))
        for (const auto& e : j["blue"]) ds.blue.push_back(point_from_json(e, 0));
    if (j.contains("meta")) {
        DatasetMeta m;
        const auto& jm = j["meta"];
        m.name = jm.value("name", "");
        m.generator = jm.value("generator", "");
        m.seed = jm.value("seed", std::uint64_t{0});
        if (jm.contains("params"))
            for (const auto& [k, v] : jm["params"].items()) m.params[k] = v.get<double>();
        ds.meta = m;
    }
    return ds;
}

json points_to_json(const std::vector<Point3>& pts) {
    json arr = json::array();
    for (const Point3& p : pts) arr.push_back({p.x, p.y, p.z});
    return arr;
}

void save_json(std::ostream& out, const Dataset& ds) {
    json j;
    j["red"] = points_to_json(ds.red);
    j["blue"] = points_to_json(ds.blue);
    if (ds.meta) {
        json m;
        if (!ds.meta->name.empty()) m["name"] = ds.meta->name;
        if (!ds.meta->generator.empty()) m["generator"] = ds.meta->generator;
        m["seed"] = ds.meta->seed;
        if (!ds.meta->params.empty()) m["params"] = ds.meta->params;
        j["meta"] = m;
    }
    out << j.dump(2) << "\n";
}

}  // namespace

Dataset load_dataset(std::istream& in, Format format) {
    return format == Format::csv ? load_csv(in) : load_json(in);
}

Dataset load_dataset_file(const std::string& path, Format format) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return load_dataset(in, format);
}

void save_dataset(std::ostream& out, const Dataset& ds, Format format) {
    if (format == Format::csv) save_csv(out, ds);
    else save_json(out, ds);
}

void save_dataset_file(const std::string& path, const Dataset& ds, Format format) {
    std::ofstream out(path);
    if (!out) throw error("cannot open " + path);
    save_dataset(out, ds, format);
}

std::vector<Point3> load_points_file(const std::string& path, Format format) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::vector<Point3> pts;
    if (format == Format::json) {
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw parse_error(0, e.what());
        }
        if (!j.is_array()) throw parse_error(0, "expected a JSON array of [x,y,z]");
        for (const auto& e : j) pts.push_back(point_from_json(e, 0));
        return pts;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t == "x,y,z") continue;
        auto fields = split(t, ',');
        if (fields.size() != 3) throw parse_error(lineno, "expected 3 fields");
        pts.push_back(Point3{parse_double(fields[0], lineno), parse_double(fields[1], lineno),
                             parse_double(fields[2], lineno)});
    }
    return pts;
}

}  // namespace mbsb
