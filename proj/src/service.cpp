#include "pert/service.hpp"

#include "pert/error.hpp"
#include "pert/whatif.hpp"

#include <httplib.h>

#include <iostream>

namespace pert {

namespace {

int status_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Input: return 400;
    case ErrorKind::Dimension: return 409;
    case ErrorKind::Domain: return 422;
    case ErrorKind::Limit: return 422;
    }
    return 500;
}

ServiceResponse error_response(int status, const std::string& code, const std::string& message) {
    return {status, io::json{{"error", code}, {"message", message}}.dump()};
}

ServiceResponse ok(const io::json& j) { return {200, j.dump()}; }

io::json parse_body(const std::string& body) {
    auto j = io::json::parse(body, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::Input, "MalformedInput", "request body is not valid JSON");
    return j;
}

} // namespace

Service::Service(SessionLimits limits) : session_(limits), server_(std::make_unique<httplib::Server>()) {
    auto route = [this](const std::string& method) {
        return [this, method](const httplib::Request& req, httplib::Response& res) {
            auto r = handle(method, req.path, req.body);
            res.status = r.status;
            res.set_content(r.body, "application/json");
        };
    };
    for (const char* path : {"/network", "/costs"}) server_->Put(path, route("PUT"));
    for (const char* path : {"/network", "/eft", "/adjacency", "/newton", "/chamber"}) server_->Get(path, route("GET"));
    server_->Post("/whatif", route("POST"));
}

Service::~Service() = default;

ServiceResponse Service::handle(const std::string& method, const std::string& path, const std::string& body) {
    try {
        if (method == "PUT" && path == "/network") {
            session_.load(io::network_from_json(parse_body(body)));
            return ok(io::network_to_json(session_.snapshot()->network()));
        }

        auto snap = session_.snapshot();
        const bool known = (method == "GET" && (path == "/network" || path == "/eft" || path == "/adjacency" ||
                                                path == "/newton" || path == "/chamber")) ||
                           (method == "PUT" && path == "/costs") || (method == "POST" && path == "/whatif");
        if (!known) return error_response(404, "NotFound", method + " " + path);
        if (!snap) return error_response(404, "NoNetwork", "PUT /network first");

        if (method == "PUT") {
            auto j = parse_body(body);
            const auto& costs = j.is_object() && j.contains("costs") ? j["costs"] : j;
            if (!costs.is_array()) throw Error(ErrorKind::Input, "MalformedInput", "expected {\"costs\": [...]}");
            CostVector t;
            for (const auto& x : costs) t.push_back(io::rational_from_json(x));
            session_.set_costs(std::move(t));
            io::json out = io::json::array();
            for (const auto& c : session_.snapshot()->costs) out.push_back(io::rational_to_json(c));
            return ok(io::json{{"costs", out}});
        }
        if (path == "/network") return ok(io::network_to_json(snap->network()));
        if (path == "/eft") return ok(answers::eft(snap->polynomial(), snap->costs));
        if (path == "/adjacency") return ok(answers::graph(snap->model->adjacency()));
        if (path == "/newton") return ok(answers::graph(snap->model->newton()));
        if (path == "/chamber") return ok(answers::chamber(snap->polynomial(), snap->costs));

        // POST /whatif
        auto j = parse_body(body);
        if (!j.is_object() || !j.contains("activity") || !j["activity"].is_number_integer() ||
            !j.contains("direction") || !j["direction"].is_string())
            throw Error(ErrorKind::Input, "MalformedInput", "expected {\"activity\": i, \"direction\": \"up\"|\"down\"}");
        const int sign = answers::parse_direction(j["direction"].get<std::string>());
        return ok(answers::whatif(snap->polynomial(), snap->model->adjacency(), snap->costs, j["activity"].get<int>(),
                                  sign));
    } catch (const Error& e) {
        return error_response(status_for(e.kind()), e.code(), e.what());
    } catch (const std::exception& e) {
        return error_response(500, "InternalError", e.what());
    }
}

int Service::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host.c_str());
    return server_->bind_to_port(host.c_str(), port) ? port : -1;
}

bool Service::listen_after_bind() { return server_->listen_after_bind(); }

void Service::stop() { server_->stop(); }

bool serve(const std::string& host, int port, SessionLimits limits) {
    Service service(limits);
    int bound = service.bind(host, port);
    if (bound < 0) return false;
    std::cerr << "listening on http://" << host << ":" << bound << "\n";
    return service.listen_after_bind();
}

} // namespace pert
