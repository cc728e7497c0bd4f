#pragma once

#include "pert/session.hpp"

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace pert {

struct ServiceResponse {
    int status = 200;
    std::string body;  // JSON
};

/// HTTP+JSON front end over one Session:
///   PUT /network, GET /network, PUT /costs, GET /eft, GET /adjacency,
///   GET /newton, POST /whatif, GET /chamber.
/// Errors: 400 malformed input, 404 no network loaded / unknown route,
/// 409 dimension mismatch, 422 domain and budget errors.
class Service {
public:
    explicit Service(SessionLimits limits = {});
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Transport-free dispatch; the HTTP routes call this.
    ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

    /// Binds to host:port (port 0 picks a free one) and returns the port,
    /// or -1 on failure.
    int bind(const std::string& host, int port);
    /// Blocks serving requests until stop().
    bool listen_after_bind();
    void stop();

    Session& session() noexcept { return session_; }

private:
    Session session_;
    std::unique_ptr<httplib::Server> server_;
};

/// Serves until the process is interrupted. Returns false when the port
/// cannot be bound.
bool serve(const std::string& host, int port, SessionLimits limits);

} // namespace pert
