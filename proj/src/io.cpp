#include "io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dgc {

namespace {

Json element_ref(const DGAlgebra& a, int g) {
    auto [deg, ord] = a.local(g);
    return Json::array({deg, a.basis.names[deg][ord]});
}

int resolve_ref(const DGAlgebra& a, const Json& ref) {
    require(ref.is_array() && ref.size() == 2, errc::input, "bad element reference in DGA file");
    int deg = ref[0].get<int>();
    int ord = a.basis.find(deg, ref[1].get<std::string>());
    require(ord >= 0, errc::input,
            "unknown basis element '" + ref[1].get<std::string>() + "' in degree " +
                std::to_string(deg));
    return a.global(deg, ord);
}

Json table_to_json(const DGAlgebra& a,
                   const std::map<std::pair<int, int>, SparseElem>& table) {
    Json rows = Json::array();
    for (const auto& [key, val] : table)
        for (const auto& [g, c] : val) {
            Json row = Json::array();
            row.push_back(element_ref(a, key.first));
            row.push_back(element_ref(a, key.second));
            row.push_back(element_ref(a, g));
            row.push_back(c.get_str());
            rows.push_back(std::move(row));
        }
    return rows;
}

void table_from_json(DGAlgebra& a, const Json& rows,
                     std::map<std::pair<int, int>, SparseElem>& table) {
    for (const auto& row : rows) {
        require(row.is_array() && row.size() == 4, errc::input, "bad table row in DGA file");
        int l = resolve_ref(a, row[0]);
        int r = resolve_ref(a, row[1]);
        int g = resolve_ref(a, row[2]);
        table[{l, r}][g] = Int(row[3].get<std::string>());
    }
}

}  // namespace

Json dga_to_json(const DGAlgebra& a) {
    Json j;
    j["format"] = "dgcalc-dga-v1";
    j["ring"] = a.ring.to_string();
    j["label"] = a.label;
    Json basis = Json::array();
    for (int deg = 0; deg <= a.top_degree(); ++deg)
        for (const auto& name : a.basis.names[deg])
            basis.push_back(Json::array({deg, name}));
    j["basis"] = std::move(basis);

    Json diff = Json::array();
    for (int deg = 0; deg <= a.top_degree(); ++deg)
        for (const auto& [rc, val] : a.diffs[deg].entries) {
            Json row = Json::array();
            row.push_back(element_ref(a, a.global(deg, rc.second)));
            row.push_back(element_ref(a, a.global(deg + 1, rc.first)));
            row.push_back(val.get_str());
            diff.push_back(std::move(row));
        }
    j["differential"] = std::move(diff);
    j["product"] = table_to_json(a, a.product_table);
    if (a.has_cup1) j["cup_one"] = table_to_json(a, a.cup1_table);

    Json unit = Json::array(), aug = Json::array();
    for (int i = 0; i < a.dim(0); ++i) {
        if (a.unit[i] != 0)
            unit.push_back(Json::array({a.basis.names[0][i], a.unit[i].get_str()}));
        if (a.augment[i] != 0)
            aug.push_back(Json::array({a.basis.names[0][i], a.augment[i].get_str()}));
    }
    j["unit"] = std::move(unit);
    j["augmentation"] = std::move(aug);
    return j;
}

DGAlgebra dga_from_json(const Json& j) {
    require(j.is_object(), errc::input, "DGA file must be a JSON object");
    require(j.value("format", "") == "dgcalc-dga-v1", errc::input,
            "DGA file format marker missing or unsupported");
    DGAlgebra a;
    a.ring = RingTag::parse(j.at("ring").get<std::string>());
    a.label = j.value("label", "dga");
    for (const auto& entry : j.at("basis")) {
        require(entry.is_array() && entry.size() == 2, errc::input, "bad basis entry");
        a.basis.add(entry[0].get<int>(), entry[1].get<std::string>());
    }
    a.unit.assign(a.basis.dim(0), 0);
    a.augment.assign(a.basis.dim(0), 0);
    for (const auto& entry : j.at("unit")) {
        int ord = a.basis.find(0, entry[0].get<std::string>());
        require(ord >= 0, errc::input, "unit references an unknown degree-0 element");
        a.unit[ord] = Int(entry[1].get<std::string>());
    }
    for (const auto& entry : j.at("augmentation")) {
        int ord = a.basis.find(0, entry[0].get<std::string>());
        require(ord >= 0, errc::input, "augmentation references an unknown degree-0 element");
        a.augment[ord] = Int(entry[1].get<std::string>());
    }
    a.finalize();

    for (const auto& row : j.at("differential")) {
        require(row.is_array() && row.size() == 3, errc::input, "bad differential row");
        int src = resolve_ref(a, row[0]);
        int dst = resolve_ref(a, row[1]);
        auto [sdeg, sord] = a.local(src);
        auto [ddeg, dord] = a.local(dst);
        require(ddeg == sdeg + 1, errc::input, "differential row is not degree +1");
        a.diffs[sdeg].add_to(dord, sord, Int(row[2].get<std::string>()));
    }
    table_from_json(a, j.at("product"), a.product_table);
    if (j.contains("cup_one")) {
        a.has_cup1 = true;
        table_from_json(a, j.at("cup_one"), a.cup1_table);
    }
    a.finalize();
    return a;
}

Json betti_to_json(const BettiTable& t) {
    Json j;
    j["ring"] = t.ring.to_string();
    j["source"] = t.source;
    j["truncation"] = t.truncation;
    j["safe_window"] = t.safe_window;
    j["dims"] = t.dims;
    return j;
}

std::string betti_to_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "degree,dimension\n";
    for (std::size_t d = 0; d < t.dims.size(); ++d) os << d << "," << t.dims[d] << "\n";
    return os.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Cache::path_for(const std::string& key) const {
    std::ostringstream os;
    os << dir_ << "/" << std::hex << fnv1a64(key) << ".json";
    return os.str();
}

std::optional<Json> Cache::lookup(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("key", "") != key) return std::nullopt;  // collision: treat as miss
    return j.at("value");
}

void Cache::store(const std::string& key, const Json& value) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    Json j;
    j["key"] = key;
    j["value"] = value;
    std::ofstream out(path_for(key));
    out << j.dump();
}

}  // namespace dgc
