#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fulfill/classifier.hpp"
#include "fulfill/errors.hpp"
#include "fulfill/format.hpp"

namespace fulfill {
namespace {

constexpr const char* kMagic = "fulfill-model v1";

void check_name(const std::string& name) {
    if (name.empty() || name.find('\t') != std::string::npos ||
        name.find('\n') != std::string::npos)
        throw DataError("feature name not serializable: '" + name + "'");
}

// Names ordered by column so line k of the feature block is column k.
std::vector<std::string> names_by_column(const std::map<std::string, std::size_t>& index) {
    std::vector<std::string> names(index.size());
    for (const auto& [name, col] : index) {
        if (col >= names.size() || !names[col].empty())
            throw DataError("feature index is not a dense column permutation");
        names[col] = name;
    }
    return names;
}

class LineReader {
public:
    LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

    std::string next(const char* what) {
        std::string line;
        if (!std::getline(in_, line))
            throw DataError(name_ + ": truncated model file, expected " + std::string(what));
        ++lineno_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    }

    std::string expect_kv(const std::string& key) {
        std::string line = next(key.c_str());
        if (line.rfind(key + " ", 0) != 0)
            throw DataError(name_ + ":" + std::to_string(lineno_) + ": expected '" + key +
                            " ...', got '" + line + "'");
        return line.substr(key.size() + 1);
    }

    double expect_double(const std::string& key) { return to_double(expect_kv(key), key); }

    long long expect_int(const std::string& key) {
        std::string v = expect_kv(key);
        std::size_t pos = 0;
        long long out = 0;
        try {
            out = std::stoll(v, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != v.size())
            throw DataError(name_ + ": bad integer for '" + key + "': '" + v + "'");
        return out;
    }

    double to_double(const std::string& v, const std::string& key) {
        // strtod instead of stod: stod throws on subnormals, which %.17g
        // output can legitimately contain.
        const char* begin = v.c_str();
        char* end = nullptr;
        double out = std::strtod(begin, &end);
        if (v.empty() || end != begin + v.size() || !std::isfinite(out))
            throw DataError(name_ + ": bad number for '" + key + "': '" + v + "'");
        return out;
    }

    const std::string& name() const { return name_; }

private:
    std::istream& in_;
    std::string name_;
    std::size_t lineno_ = 0;
};

}  // namespace

void save_model(std::ostream& out, const AnyModel& m) {
    out << kMagic << '\n';
    if (const auto* lr = std::get_if<LinearModel>(&m)) {
        auto names = names_by_column(lr->feature_index);
        if (names.size() != lr->weights.size())
            throw DataError("model weight count does not match feature index");
        out << "kind lr\n";
        out << "families " << lr->families << '\n';
        out << "scope " << lr->scope << '\n';
        out << "lambda " << format_double(lr->l2_lambda) << '\n';
        out << "threshold " << format_double(lr->threshold) << '\n';
        out << "bias " << format_double(lr->bias) << '\n';
        out << "epochs " << lr->meta.epochs << '\n';
        out << "learning_rate " << format_double(lr->meta.learning_rate) << '\n';
        out << "line_search " << (lr->meta.line_search ? 1 : 0) << '\n';
        out << "seed " << lr->meta.seed << '\n';
        out << "final_loss " << format_double(lr->meta.final_loss) << '\n';
        out << "features " << names.size() << '\n';
        for (std::size_t k = 0; k < names.size(); ++k) {
            check_name(names[k]);
            out << names[k] << '\t' << format_double(lr->weights[k]) << '\n';
        }
    } else {
        const auto& nb = std::get<NBModel>(m);
        auto names = names_by_column(nb.feature_index);
        if (names.size() != nb.count_fulfilled.size() ||
            names.size() != nb.count_unfulfilled.size())
            throw DataError("model count tables do not match feature index");
        out << "kind nb\n";
        out << "families " << nb.families << '\n';
        out << "scope " << nb.scope << '\n';
        out << "alpha " << format_double(nb.alpha) << '\n';
        out << "threshold " << format_double(nb.threshold) << '\n';
        out << "prior_fulfilled " << format_double(nb.prior_fulfilled) << '\n';
        out << "total_fulfilled " << format_double(nb.total_fulfilled) << '\n';
        out << "total_unfulfilled " << format_double(nb.total_unfulfilled) << '\n';
        out << "features " << names.size() << '\n';
        for (std::size_t k = 0; k < names.size(); ++k) {
            check_name(names[k]);
            out << names[k] << '\t' << format_double(nb.count_fulfilled[k]) << '\t'
                << format_double(nb.count_unfulfilled[k]) << '\n';
        }
    }
}

void save_model(const std::string& path, const AnyModel& m) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    save_model(out, m);
    if (!out) throw DataError("error writing '" + path + "'");
}

AnyModel load_model(std::istream& in, const std::string& name) {
    LineReader r(in, name);
    if (r.next("header") != kMagic)
        throw DataError(name + ": not a '" + std::string(kMagic) + "' file");
    std::string kind = r.expect_kv("kind");
    if (kind == "lr") {
        LinearModel m;
        m.families = r.expect_kv("families");
        m.scope = r.expect_kv("scope");
        m.l2_lambda = r.expect_double("lambda");
        m.threshold = r.expect_double("threshold");
        m.bias = r.expect_double("bias");
        m.meta.epochs = static_cast<std::size_t>(r.expect_int("epochs"));
        m.meta.learning_rate = r.expect_double("learning_rate");
        m.meta.line_search = r.expect_int("line_search") != 0;
        m.meta.seed = static_cast<std::uint32_t>(r.expect_int("seed"));
        m.meta.final_loss = r.expect_double("final_loss");
        long long k = r.expect_int("features");
        if (k < 0) throw DataError(name + ": negative feature count");
        for (long long i = 0; i < k; ++i) {
            std::string line = r.next("feature row");
            std::size_t tab = line.find('\t');
            if (tab == std::string::npos || tab == 0)
                throw DataError(name + ": bad feature row '" + line + "'");
            std::string fname = line.substr(0, tab);
            if (!m.feature_index.emplace(fname, static_cast<std::size_t>(i)).second)
                throw DataError(name + ": duplicate feature '" + fname + "'");
            m.weights.push_back(r.to_double(line.substr(tab + 1), "weight"));
        }
        return m;
    }
    if (kind == "nb") {
        NBModel m;
        m.families = r.expect_kv("families");
        m.scope = r.expect_kv("scope");
        m.alpha = r.expect_double("alpha");
        m.threshold = r.expect_double("threshold");
        m.prior_fulfilled = r.expect_double("prior_fulfilled");
        m.total_fulfilled = r.expect_double("total_fulfilled");
        m.total_unfulfilled = r.expect_double("total_unfulfilled");
        long long k = r.expect_int("features");
        if (k < 0) throw DataError(name + ": negative feature count");
        for (long long i = 0; i < k; ++i) {
            std::string line = r.next("feature row");
            std::size_t t1 = line.find('\t');
            std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
            if (t1 == std::string::npos || t2 == std::string::npos || t1 == 0)
                throw DataError(name + ": bad feature row '" + line + "'");
            std::string fname = line.substr(0, t1);
            if (!m.feature_index.emplace(fname, static_cast<std::size_t>(i)).second)
                throw DataError(name + ": duplicate feature '" + fname + "'");
            m.count_fulfilled.push_back(
                r.to_double(line.substr(t1 + 1, t2 - t1 - 1), "count"));
            m.count_unfulfilled.push_back(r.to_double(line.substr(t2 + 1), "count"));
        }
        return m;
    }
    throw DataError(name + ": unknown model kind '" + kind + "'");
}

AnyModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return load_model(in, path);
}

Prediction predict_any(const AnyModel& m, const FeatureVector& fv) {
    if (const auto* lr = std::get_if<LinearModel>(&m)) return predict(*lr, fv);
    return predict_nb(std::get<NBModel>(m), fv);
}

std::string model_kind(const AnyModel& m) {
    return std::holds_alternative<LinearModel>(m) ? "lr" : "nb";
}

}  // namespace fulfill
