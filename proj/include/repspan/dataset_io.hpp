#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "repspan/parity.hpp"

namespace repspan {

/// Text datasets: header line "#d=<d>", then one record per line as a
/// d-character 0/1 bitstring, optionally ",<label bit>".
struct Dataset {
    int d = 0;
    bool labeled = false;
    std::vector<LabeledSample> samples;
};

Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);

void write_dataset(std::ostream& out, const Dataset& data);
void write_dataset_file(const std::string& path, const Dataset& data);

} // namespace repspan
