"""HTTP gateway over the plant: the seven widget-data routes.

Every route is GET /api/v1/widget/{alias}/{field}. Success bodies are
{"alias": ..., "result": ...}; failures are {"error": ...} with a 404 for
unknown aliases. The gateway itself is stateless: it only reads plant
snapshots.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .errors import UnknownAlias
from .sim.plant import Plant

ROUTE_FIELDS = (
    "master",
    "parents",
    "children",
    "alarms",
    "frontend-status",
    "device-status",
    "device-type",
)


def create_sim_app(plant: Plant) -> FastAPI:
    app = FastAPI(title="plant widget gateway")
    app.state.plant = plant

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request, exc):
        # keep the error envelope uniform even for unmatched paths
        return JSONResponse({"error": str(exc.detail)}, status_code=exc.status_code)

    readers = {
        "master": plant.get_master,
        "parents": plant.get_parents,
        "children": plant.get_children,
        "alarms": plant.get_alarms,
        "frontend-status": plant.get_frontend_status,
        "device-status": plant.get_device_status,
        "device-type": plant.get_device_type,
    }

    @app.get("/api/v1/widget/{alias}/{field}")
    def widget_field(alias: str, field: str):
        reader = readers.get(field)
        if reader is None:
            return JSONResponse({"error": f"unknown field: {field}"}, status_code=404)
        try:
            result = reader(alias)
        except UnknownAlias:
            return JSONResponse({"error": "unknown alias"}, status_code=404)
        return {"alias": alias, "result": result}

    @app.post("/api/v1/widget/{alias}/inject/{fault}")
    def inject(alias: str, fault: str):
        # dev-mode hook used by the operator UI's fault panel
        try:
            dev = plant.inject_fault(alias, fault)
        except UnknownAlias:
            return JSONResponse({"error": "unknown alias"}, status_code=404)
        except ValueError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return {
            "alias": alias,
            "result": {
                "frontend_status_code": dev.frontend_status_code,
                "device_status_bits": dev.device_status_bits,
            },
        }

    return app


def serve(bind: str, plant: Plant) -> None:
    """Run the gateway until interrupted. bind = "host:port"."""
    import uvicorn

    host, _, port = bind.rpartition(":")
    uvicorn.run(create_sim_app(plant), host=host or "127.0.0.1", port=int(port))
