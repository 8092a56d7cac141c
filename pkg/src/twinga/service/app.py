"""FastAPI service exposing presets, single-mode runs and mode comparisons.

Endpoints are synchronous and stateless: a run request is computed on
the spot (population 40 and budgets of <= 20 generations keep this well
inside request scale) and the rendered CSV documents come back in the
response, so any client can persist byte-identical result files.
"""

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..config import ATGA, SGA
from ..errors import GaError
from ..experiment import (
    MAX_GENERATIONS,
    SUMMARY_HEADER,
    build_config,
    compare_modes,
    render_exports,
    run_trials,
    summarize,
    summary_row,
)
from ..benchmarks import PRESETS
from .schemas import (
    CompareRequest,
    CompareResponse,
    ExportFile,
    FunctionComparison,
    PresetInfo,
    RunRequest,
    RunResponse,
    SummaryStats,
)


def _summary_model(function: str, mode: str, stats) -> SummaryStats:
    return SummaryStats(
        function=function,
        mode=mode,
        n_trials=stats.n_trials,
        mean_best=stats.mean_best,
        max_best=stats.max_best,
        cv_percent=stats.cv_percent,
        mean_convergence_gen=stats.mean_convergence_generation,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="twinga",
        version=__version__,
        description="Benchmark runs of a binary GA with an adaptive twin operator",
    )

    @app.exception_handler(GaError)
    async def ga_error_handler(request, exc: GaError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "version": __version__}

    @app.get("/api/presets", response_model=list[PresetInfo])
    def presets():
        infos = []
        for name, spec in sorted(PRESETS.items()):
            config = build_config(name, SGA)
            infos.append(
                PresetInfo(
                    function=name,
                    n_variables=spec.n_variables,
                    lower_bound=spec.lo,
                    upper_bound=spec.hi,
                    bits_per_variable=spec.bits_per_variable,
                    chromosome_length=spec.chromosome_length,
                    global_optimum_value=spec.global_optimum_value,
                    global_optimum_point=list(spec.global_optimum_point),
                    pop_size=config.pop_size,
                    p_c=config.p_c,
                    p_m=config.p_m,
                    tournament_size=config.tournament_size,
                    max_generations=MAX_GENERATIONS[name],
                )
            )
        return infos

    @app.post("/api/run", response_model=RunResponse)
    def run_experiment(request: RunRequest):
        config = build_config(
            request.function, request.mode, seed=request.seed, overrides=request.overrides
        )
        records = run_trials(config, request.trials)
        stats = summarize(config, records)
        documents = render_exports(
            records, stats, function=request.function, mode=request.mode, seed=request.seed
        )
        return RunResponse(
            function=request.function,
            mode=request.mode,
            trials=request.trials,
            seed=request.seed,
            summary=_summary_model(request.function, request.mode, stats),
            files=[ExportFile(name=n, content=c) for n, c in documents.items()],
        )

    @app.post("/api/compare", response_model=CompareResponse)
    def compare_experiment(request: CompareRequest):
        comparisons = []
        rows = [SUMMARY_HEADER]
        for function in request.functions:
            results = compare_modes(
                function, trials=request.trials, seed=request.seed, overrides=request.overrides
            )
            by_mode = {}
            for mode in (SGA, ATGA):
                _, _, stats = results[mode]
                by_mode[mode] = _summary_model(function, mode, stats)
                rows.append(summary_row(function, mode, stats))
            comparisons.append(
                FunctionComparison(function=function, sga=by_mode[SGA], atga=by_mode[ATGA])
            )
        if len(request.functions) == 1:
            name = f"{request.functions[0]}_compare_{request.seed}.summary.csv"
        else:
            name = f"all_compare_{request.seed}.summary.csv"
        content = "\n".join(rows) + "\n"
        return CompareResponse(
            trials=request.trials,
            seed=request.seed,
            comparisons=comparisons,
            files=[ExportFile(name=name, content=content)],
        )

    return app


app = create_app()
