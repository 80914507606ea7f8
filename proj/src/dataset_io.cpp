#include "repspan/dataset_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace repspan {

Dataset read_dataset(std::istream& in) {
    Dataset data;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            if (line.rfind("#d=", 0) == 0) {
                data.d = std::stoi(line.substr(3));
                header_seen = true;
            }
            continue;
        }
        if (!header_seen) {
            throw std::runtime_error("dataset: missing #d=<d> header");
        }
        const std::size_t comma = line.find(',');
        const std::string bits = line.substr(0, comma);
        if (static_cast<int>(bits.size()) != data.d) {
            throw std::runtime_error("dataset line " + std::to_string(lineno) +
                                     ": record length does not match d");
        }
        LabeledSample s{BitVec::from_string(bits), 0};
        if (comma != std::string::npos) {
            const std::string label = line.substr(comma + 1);
            if (label != "0" && label != "1") {
                throw std::runtime_error("dataset line " +
                                         std::to_string(lineno) +
                                         ": label must be 0 or 1");
            }
            s.y = label == "1" ? 1 : 0;
            data.labeled = true;
        }
        data.samples.push_back(std::move(s));
    }
    if (!header_seen) {
        throw std::runtime_error("dataset: missing #d=<d> header");
    }
    return data;
}

Dataset read_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file: " + path);
    }
    return read_dataset(in);
}

void write_dataset(std::ostream& out, const Dataset& data) {
    out << "#d=" << data.d << "\n";
    for (const LabeledSample& s : data.samples) {
        out << s.x.to_string();
        if (data.labeled) {
            out << ',' << (s.y & 1);
        }
        out << "\n";
    }
}

void write_dataset_file(const std::string& path, const Dataset& data) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write dataset file: " + path);
    }
    write_dataset(out, data);
}

} // namespace repspan
