#include "ncc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ncc::io {
namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

FiniteTypeConstraint parse_constraint(const std::string& text) {
    std::vector<BitWord> forbidden;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        if (token.empty() || token[0] == '#') continue;
        forbidden.push_back(BitWord::parse(token));
    }
    return FiniteTypeConstraint(std::move(forbidden));
}

FiniteTypeConstraint read_constraint(const std::string& path) {
    return parse_constraint(slurp(path));
}

MarkovChain parse_chain(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("chain file is not valid JSON: ") + e.what());
    }
    if (!j.contains("order") || !j.contains("contexts") || !j.contains("kernel"))
        throw std::invalid_argument("chain file needs fields order, contexts, kernel");
    const int order = j.at("order").get<int>();
    const auto& ctxs = j.at("contexts");
    const auto& kernel = j.at("kernel");
    if (!ctxs.is_array() || !kernel.is_array() || ctxs.size() != kernel.size())
        throw std::invalid_argument("contexts and kernel must be arrays of equal length");
    std::vector<MarkovChain::KernelRow> rows;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        const BitWord ctx = BitWord::parse(ctxs[i].get<std::string>());
        const auto& row = kernel[i];
        if (!row.is_array() || row.size() != 2)
            throw std::invalid_argument("kernel rows must hold two probabilities");
        rows.emplace_back(ctx, std::array<double, 2>{row[0].get<double>(), row[1].get<double>()});
    }
    return MarkovChain::from_kernel(order, std::move(rows));
}

MarkovChain read_chain(const std::string& path) { return parse_chain(slurp(path)); }

std::string chain_to_json(const MarkovChain& chain) {
    nlohmann::json j;
    j["order"] = chain.order();
    auto& ctxs = j["contexts"] = nlohmann::json::array();
    auto& kernel = j["kernel"] = nlohmann::json::array();
    for (const BitWord& c : chain.contexts()) {
        ctxs.push_back(c.str());
        nlohmann::json row = nlohmann::json::array();
        for (int b = 0; b < 2; ++b) {
            const double t = chain.transition(c, b);
            // exact zeros and ones as integers keeps them exact on re-read
            if (t == 0.0) row.push_back(0);
            else if (t == 1.0) row.push_back(1);
            else row.push_back(t);
        }
        kernel.push_back(row);
    }
    return j.dump(2) + "\n";
}

void write_chain(const MarkovChain& chain, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << chain_to_json(chain);
}

}  // namespace ncc::io
