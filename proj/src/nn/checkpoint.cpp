#include "solslab/nn/checkpoint.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace solslab::nn {

static_assert(std::endian::native == std::endian::little,
              "checkpoint payloads assume a little-endian host");

namespace {

constexpr const char* kFormatName = "solslab-params";
constexpr int kFormatVersion = 1;

using ordered_json = nlohmann::ordered_json;

void write_matrix(std::ostream& out, const Matrix& m) {
    out.write(reinterpret_cast<const char*>(m.data()),
              static_cast<std::streamsize>(sizeof(double) * m.size()));
}

void read_matrix(std::istream& in, Matrix& m) {
    in.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
    if (!in) {
        throw FormatError("checkpoint: truncated payload");
    }
}

}  // namespace

void save_param_store(std::ostream& out, const ParamStore& store, const AdamwState* opt) {
    ordered_json header;
    header["format"] = kFormatName;
    header["version"] = kFormatVersion;
    header["step"] = store.step;
    ordered_json arrays = ordered_json::array();
    for (const auto& name : store.names()) {
        const Matrix& p = store.param(name);
        arrays.push_back({{"name", name}, {"rows", p.rows()}, {"cols", p.cols()}});
    }
    header["arrays"] = arrays;
    if (opt != nullptr) {
        header["optimizer"] = {{"lr", opt->cfg.lr},
                               {"beta1", opt->cfg.beta1},
                               {"beta2", opt->cfg.beta2},
                               {"eps", opt->cfg.eps},
                               {"weight_decay", opt->cfg.weight_decay}};
    } else {
        header["optimizer"] = nullptr;
    }
    out << header.dump() << '\n';
    for (const auto& name : store.names()) {
        write_matrix(out, store.param(name));
    }
    if (opt != nullptr) {
        for (const auto& name : store.names()) {
            write_matrix(out, opt->has_moments(name)
                                  ? opt->first_moment(name)
                                  : Matrix::Zero(store.param(name).rows(),
                                                 store.param(name).cols()).eval());
        }
        for (const auto& name : store.names()) {
            write_matrix(out, opt->has_moments(name)
                                  ? opt->second_moment(name)
                                  : Matrix::Zero(store.param(name).rows(),
                                                 store.param(name).cols()).eval());
        }
    }
}

void load_param_store(std::istream& in, ParamStore& store, AdamwState* opt) {
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw FormatError("checkpoint: missing header");
    }
    ordered_json header;
    try {
        header = ordered_json::parse(header_line);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("checkpoint: bad header: ") + e.what());
    }
    if (header.value("format", "") != kFormatName ||
        header.value("version", -1) != kFormatVersion) {
        throw FormatError("checkpoint: format/version mismatch");
    }
    const bool has_opt = !header.at("optimizer").is_null();
    if (opt != nullptr && !has_opt) {
        throw FormatError("checkpoint: optimizer state requested but absent");
    }

    // Build into fresh objects so a corrupt payload cannot leave a partial load.
    ParamStore fresh;
    fresh.step = header.at("step").get<long long>();
    for (const auto& entry : header.at("arrays")) {
        Matrix m(entry.at("rows").get<Eigen::Index>(), entry.at("cols").get<Eigen::Index>());
        read_matrix(in, m);
        fresh.add(entry.at("name").get<std::string>(), std::move(m));
    }
    AdamwState fresh_opt;
    if (opt != nullptr) {
        const auto& o = header.at("optimizer");
        fresh_opt.cfg.lr = o.at("lr").get<double>();
        fresh_opt.cfg.beta1 = o.at("beta1").get<double>();
        fresh_opt.cfg.beta2 = o.at("beta2").get<double>();
        fresh_opt.cfg.eps = o.at("eps").get<double>();
        fresh_opt.cfg.weight_decay = o.at("weight_decay").get<double>();
        for (const auto& entry : header.at("arrays")) {
            Matrix m(entry.at("rows").get<Eigen::Index>(),
                     entry.at("cols").get<Eigen::Index>());
            read_matrix(in, m);
            fresh_opt.mutable_first_moment(entry.at("name").get<std::string>()) = std::move(m);
        }
        for (const auto& entry : header.at("arrays")) {
            Matrix m(entry.at("rows").get<Eigen::Index>(),
                     entry.at("cols").get<Eigen::Index>());
            read_matrix(in, m);
            fresh_opt.mutable_second_moment(entry.at("name").get<std::string>()) = std::move(m);
        }
    }
    store = std::move(fresh);
    if (opt != nullptr) {
        *opt = std::move(fresh_opt);
    }
}

void save_param_store_file(const std::string& path, const ParamStore& store,
                           const AdamwState* opt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("checkpoint: cannot open for write: " + path);
    }
    save_param_store(out, store, opt);
}

void load_param_store_file(const std::string& path, ParamStore& store, AdamwState* opt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("checkpoint: cannot open for read: " + path);
    }
    load_param_store(in, store, opt);
}

}  // namespace solslab::nn
