"""Experiment pipelines for the chaos_probe CLI."""
from chaos_probe.tasks.convergence_process import run_convergence
from chaos_probe.tasks.le_process import run_le
from chaos_probe.tasks.pool import resolve_workers, run_tasks
from chaos_probe.tasks.spectral_process import EtaRow, run_eta_sweep, spectral_run
from chaos_probe.tasks.sweep_process import run_nonmarkov, run_phase_sweep
from chaos_probe.tasks.trace_process import run_trace

EXPERIMENTS = {
    "trace": run_trace,
    "phase-sweep": run_phase_sweep,
    "eta-sweep": run_eta_sweep,
    "nonmarkov": run_nonmarkov,
    "convergence": run_convergence,
    "le": run_le,
}

__all__ = [
    "EXPERIMENTS",
    "EtaRow",
    "resolve_workers",
    "run_convergence",
    "run_eta_sweep",
    "run_le",
    "run_nonmarkov",
    "run_phase_sweep",
    "run_tasks",
    "run_trace",
    "spectral_run",
]
