#include "boilerfdd/ml/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "boilerfdd/errors.hpp"

namespace boilerfdd::ml {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

Matrix matrix_from_json(const json& j) {
    Matrix m;
    m.rows = j.at("rows").get<std::size_t>();
    m.cols = j.at("cols").get<std::size_t>();
    m.data = j.at("data").get<std::vector<double>>();
    if (m.data.size() != m.rows * m.cols) throw DataError("model matrix shape mismatch");
    return m;
}

json scaler_to_json(const Standardizer& s) {
    return json{{"mean", s.mean}, {"spread", s.spread}, {"enabled", s.enabled}};
}

Standardizer scaler_from_json(const json& j) {
    Standardizer s;
    s.mean = j.at("mean").get<std::vector<double>>();
    s.spread = j.at("spread").get<std::vector<double>>();
    s.enabled = j.at("enabled").get<bool>();
    return s;
}

json params_to_json(const ParamSet& p) {
    json values(json::value_t::object), tags(json::value_t::object);
    for (const auto& [k, v] : p.values) values[k] = v;
    for (const auto& [k, v] : p.tags) tags[k] = v;
    return json{{"values", values}, {"tags", tags}};
}

ParamSet params_from_json(const json& j) {
    ParamSet p;
    for (const auto& [k, v] : j.at("values").items()) p.values[k] = v.get<double>();
    for (const auto& [k, v] : j.at("tags").items()) p.tags[k] = v.get<std::string>();
    return p;
}

json tree_params_to_json(const TreeParams& p) {
    return json{{"max_depth", p.max_depth},
                {"min_leaf", p.min_leaf},
                {"min_split", p.min_split},
                {"criterion", p.criterion == Criterion::Gini ? "gini" : "entropy"},
                {"splitter", p.splitter == Splitter::Best ? "best" : "random"},
                {"max_features", p.max_features}};
}

TreeParams tree_params_from_json(const json& j) {
    TreeParams p;
    p.max_depth = j.at("max_depth").get<int>();
    p.min_leaf = j.at("min_leaf").get<int>();
    p.min_split = j.at("min_split").get<int>();
    p.criterion = j.at("criterion").get<std::string>() == "gini" ? Criterion::Gini
                                                                 : Criterion::Entropy;
    p.splitter = j.at("splitter").get<std::string>() == "best" ? Splitter::Best
                                                               : Splitter::Random;
    p.max_features = j.at("max_features").get<int>();
    return p;
}

json tree_to_json(const DecisionTreeModel& t) {
    json nodes = json::array();
    for (const TreeNode& n : t.nodes)
        nodes.push_back({n.feature, n.threshold, n.left, n.right, n.leaf_class});
    return json{{"params", tree_params_to_json(t.params)}, {"depth", t.depth}, {"nodes", nodes}};
}

DecisionTreeModel tree_from_json(const json& j) {
    DecisionTreeModel t;
    t.params = tree_params_from_json(j.at("params"));
    t.depth = j.at("depth").get<int>();
    for (const auto& n : j.at("nodes")) {
        TreeNode node;
        node.feature = n.at(0).get<int>();
        node.threshold = n.at(1).get<double>();
        node.left = n.at(2).get<int>();
        node.right = n.at(3).get<int>();
        node.leaf_class = n.at(4).get<int>();
        t.nodes.push_back(node);
    }
    return t;
}

}  // namespace

std::string model_to_json_text(const TrainedModel& model) {
    json j;
    j["format"] = "boilerfdd-model";
    j["format_version"] = 1;
    j["algorithm"] = to_string(model.alg);
    j["params"] = params_to_json(model.params);
    j["seed"] = model.seed;
    j["classes"] = model.classes;
    j["feature_names"] = model.feature_names;

    switch (model.alg) {
        case Algorithm::Knn: {
            const auto& m = std::get<KnnModel>(model.impl);
            j["standardization"] = scaler_to_json(m.scaler);
            j["model"] = json{{"k", m.k},
                              {"train_x", matrix_to_json(m.train_x)},
                              {"train_y", m.train_y},
                              {"n_classes", m.n_classes}};
            break;
        }
        case Algorithm::DecisionTree: {
            const auto& m = std::get<DecisionTreeModel>(model.impl);
            j["standardization"] = scaler_to_json(Standardizer{});
            j["model"] = tree_to_json(m);
            break;
        }
        case Algorithm::RandomForest: {
            const auto& m = std::get<RandomForestModel>(model.impl);
            j["standardization"] = scaler_to_json(Standardizer{});
            json trees = json::array();
            for (const auto& t : m.trees) trees.push_back(tree_to_json(t));
            j["model"] = json{{"n_estimators", m.params.n_estimators},
                              {"bootstrap", m.params.bootstrap},
                              {"max_features", m.params.max_features},
                              {"tree_params", tree_params_to_json(m.params.tree)},
                              {"n_classes", m.n_classes},
                              {"trees", trees}};
            break;
        }
        case Algorithm::Svm: {
            const auto& m = std::get<SvmModel>(model.impl);
            j["standardization"] = scaler_to_json(m.scaler);
            json machines = json::array();
            for (const auto& b : m.machines)
                machines.push_back(json{{"class_pos", b.class_pos},
                                        {"class_neg", b.class_neg},
                                        {"bias", b.bias},
                                        {"dual_coef", b.dual_coef},
                                        {"support_x", matrix_to_json(b.support_x)}});
            j["model"] = json{{"C", m.params.c},
                              {"gamma", m.params.gamma},
                              {"kkt_tol", m.params.kkt_tol},
                              {"n_classes", m.n_classes},
                              {"machines", machines}};
            break;
        }
    }
    return j.dump(2) + "\n";
}

TrainedModel model_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("model JSON parse error: ") + e.what());
    }
    try {
        TrainedModel model;
        model.alg = algorithm_from_string(j.at("algorithm").get<std::string>());
        model.params = params_from_json(j.at("params"));
        model.seed = j.value("seed", 0ull);
        model.classes = j.at("classes").get<std::vector<std::string>>();
        model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        const json& body = j.at("model");
        switch (model.alg) {
            case Algorithm::Knn: {
                KnnModel m;
                m.k = body.at("k").get<int>();
                m.scaler = scaler_from_json(j.at("standardization"));
                m.train_x = matrix_from_json(body.at("train_x"));
                m.train_y = body.at("train_y").get<std::vector<int>>();
                m.n_classes = body.at("n_classes").get<std::size_t>();
                model.impl = std::move(m);
                break;
            }
            case Algorithm::DecisionTree: {
                model.impl = tree_from_json(body);
                break;
            }
            case Algorithm::RandomForest: {
                RandomForestModel m;
                m.params.n_estimators = body.at("n_estimators").get<int>();
                m.params.bootstrap = body.at("bootstrap").get<bool>();
                m.params.max_features = body.at("max_features").get<int>();
                m.params.tree = tree_params_from_json(body.at("tree_params"));
                m.n_classes = body.at("n_classes").get<std::size_t>();
                for (const auto& t : body.at("trees")) m.trees.push_back(tree_from_json(t));
                model.impl = std::move(m);
                break;
            }
            case Algorithm::Svm: {
                SvmModel m;
                m.params.c = body.at("C").get<double>();
                m.params.gamma = body.at("gamma").get<double>();
                m.params.kkt_tol = body.at("kkt_tol").get<double>();
                m.n_classes = body.at("n_classes").get<std::size_t>();
                m.scaler = scaler_from_json(j.at("standardization"));
                for (const auto& b : body.at("machines")) {
                    BinarySvm machine;
                    machine.class_pos = b.at("class_pos").get<int>();
                    machine.class_neg = b.at("class_neg").get<int>();
                    machine.bias = b.at("bias").get<double>();
                    machine.dual_coef = b.at("dual_coef").get<std::vector<double>>();
                    machine.support_x = matrix_from_json(b.at("support_x"));
                    m.machines.push_back(std::move(machine));
                }
                model.impl = std::move(m);
                break;
            }
        }
        return model;
    } catch (const json::exception& e) {
        throw DataError(std::string("model JSON field error: ") + e.what());
    }
}

void save_model(const TrainedModel& model, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw DataError("cannot write model file " + file.string());
    out << model_to_json_text(model);
}

TrainedModel load_model(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open model file " + file.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json_text(text);
}

std::string eval_report_to_json_text(const EvalReport& report) {
    json j;
    j["accuracy"] = report.accuracy;
    j["macro_precision"] = report.macro_precision;
    j["macro_recall"] = report.macro_recall;
    j["classes"] = report.classes;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["confusion"] = report.confusion;
    j["best_params"] = params_to_json(report.best_params);
    return j.dump(2) + "\n";
}

}  // namespace boilerfdd::ml
