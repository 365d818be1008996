#include "rdw/dataset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rdw/csv.hpp"
#include "rdw/errors.hpp"

namespace rdw {

void ResponseDataset::normalize() {
    std::map<double, ResponseLevel> merged;
    for (const auto& lv : levels) {
        if (lv.n < 1) throw IoError("response level with n < 1");
        if (lv.k < 0 || lv.k > lv.n) throw IoError("response level with k outside [0, n]");
        auto [it, inserted] = merged.try_emplace(lv.gain, lv);
        if (!inserted) {
            it->second.n += lv.n;
            it->second.k += lv.k;
        }
    }
    levels.clear();
    levels.reserve(merged.size());
    for (auto& [gain, lv] : merged) levels.push_back(lv);
}

int ResponseDataset::interior_levels() const {
    int count = 0;
    for (const auto& lv : levels)
        if (lv.k > 0 && lv.k < lv.n) ++count;
    return count;
}

long ResponseDataset::total_n() const {
    long total = 0;
    for (const auto& lv : levels) total += lv.n;
    return total;
}

ResponseDataset ResponseDataset::from_csv(const std::string& path) {
    const std::string content = csv::read_file(path);
    std::istringstream in(content);
    std::string line;
    ResponseDataset data;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "gain,n,k") continue;  // header optional
        }
        auto fields = csv::split(line);
        if (fields.size() != 3)
            throw IoError(path + ":" + std::to_string(line_no) + ": expected 3 fields (gain,n,k)");
        try {
            ResponseLevel lv;
            std::size_t pos = 0;
            lv.gain = std::stod(fields[0], &pos);
            if (pos != fields[0].size()) throw std::invalid_argument("gain");
            lv.n = std::stol(fields[1], &pos);
            if (pos != fields[1].size()) throw std::invalid_argument("n");
            lv.k = std::stol(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument("k");
            data.levels.push_back(lv);
        } catch (const IoError&) {
            throw;
        } catch (const std::exception&) {
            throw IoError(path + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    data.normalize();
    if (data.levels.empty()) throw IoError(path + ": no response levels found");
    return data;
}

void ResponseDataset::to_csv(const std::string& path) const {
    std::string out = "gain,n,k\n";
    for (const auto& lv : levels) {
        out += csv::num(lv.gain);
        out += ',';
        out += std::to_string(lv.n);
        out += ',';
        out += std::to_string(lv.k);
        out += '\n';
    }
    csv::write_file(path, out);
}

}  // namespace rdw
