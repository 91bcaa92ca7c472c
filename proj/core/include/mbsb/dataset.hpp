#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbsb/geom.hpp"

namespace mbsb {

enum class Format { csv, json };
Format format_from_name(const std::string& name);

struct DatasetMeta {
    std::string name;
    std::string generator;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;

    friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

struct Dataset {
    std::vector<Point3> red;
    std::vector<Point3> blue;
    std::optional<DatasetMeta> meta;
};

/// CSV: header `label,x,y,z`, label in {red, blue}; `#` lines before the
/// header carry metadata. JSON: {"red": [[x,y,z],...], "blue": [...]} with
/// an optional "meta" object. Values round-trip exactly (shortest-form
/// decimal); NaN or infinite coordinates are rejected with the line number.
Dataset load_dataset(std::istream& in, Format format);
Dataset load_dataset_file(const std::string& path, Format format);
void save_dataset(std::ostream& out, const Dataset& ds, Format format);
void save_dataset_file(const std::string& path, const Dataset& ds, Format format);

/// Unlabeled point list: CSV rows `x,y,z` or a JSON array of triples.
std::vector<Point3> load_points_file(const std::string& path, Format format);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace mbsb
