#pragma once

#include <string>
#include <vector>

namespace hopfg {

// One verified identity instance. `where` names the grades it ran at,
// `witness` points at the first failing basis vector when pass == false.
struct CheckItem {
    std::string name;
    std::string where;
    bool pass = true;
    std::string witness;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    void add(std::string name, std::string where, bool pass, std::string witness = "") {
        items.push_back({std::move(name), std::move(where), pass, std::move(witness)});
    }

    void merge(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& it : items)
            if (!it.pass) ++n;
        return n;
    }

    std::string summary() const {
        std::string s = std::to_string(items.size()) + " checks, " +
                        std::to_string(failures()) + " failed";
        for (const auto& it : items)
            if (!it.pass) {
                s += "\n  FAIL " + it.name + " @ " + it.where;
                if (!it.witness.empty()) s += " : " + it.witness;
            }
        return s;
    }
};

}  // namespace hopfg
