"""
Main Orchestrator
Command-line entry point: simulation, limit theory, dataset fitting,
model-vs-data comparison and oracle checks.
"""

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from pa_net.config.dataset_profiles import DATASET_PROFILES, get_profile
from pa_net.config.pa_settings import RUNTIME
from pa_net.config.run_config import RunConfig
from pa_net.errors import ConfigError, InvalidParameterError, PANetError
from pa_net.graph.degree_state import ModelParams
from pa_net.pipelines.compare_pipeline import ComparePipeline
from pa_net.pipelines.dataset_pipeline import DatasetPipeline
from pa_net.pipelines.replication_pipeline import ReplicationPipeline
from pa_net.pipelines.verify_pipeline import ORACLES, VerifyPipeline
from pa_net.theory.angular import angular_density, default_theta_grid
from pa_net.theory.limit_laws import (joint_limit_grid, joint_limit_pmf, marginal_in_closed_form,
                                      marginal_in_pmf, marginal_out_closed_form, marginal_out_pmf,
                                      tail_constants, tail_exponents)
from pa_net.writers.csv_writer import CsvWriter, read_table
from pa_net.writers.json_writer import JsonWriter
from pa_net.debug.tools.run_debug_logger import COMPONENTS, debug_logger


BASE_DIR = Path(__file__).resolve().parents[1]
TESTS_DIR = BASE_DIR / "pa_net" / "debug" / "tests"

# Flags that never change an output's content.
NON_PROVENANCE = ('out', 'verbose', 'test', 'threads')

ORACLE_DEFAULTS = {
    'enumerate': {'steps': 2, 'reps': 100000},
    'embedding': {'steps': 200, 'reps': 2000},
    'growth': {'steps': 5000, 'reps': 20},
    'discrepancy': {'steps': 2000, 'reps': 100},
}


class PAOrchestrator:
    """
    Runs one subcommand and writes its outputs.
    """

    def __init__(self, out_dir: Optional[Path] = None, threads: Optional[int] = None):
        self.out_dir = Path(out_dir) if out_dir else None
        self.threads = threads or RUNTIME.threads
        self._writers = None

    @property
    def writers(self) -> Dict:
        """Lazy initialization of writers."""
        if self._writers is None:
            self._writers = {'csv': CsvWriter(), 'json': JsonWriter()}
        return self._writers

    def _target(self, name: str) -> Path:
        return (self.out_dir or RUNTIME.output_dir) / name

    def _write(self, kind: str, name: str, config: RunConfig, payload) -> Path:
        path = self.writers[kind].write(self._target(name), config, payload)
        print(f"  → {path}")
        return path

    @staticmethod
    def _banner(title: str):
        print("=" * 60)
        print(title)
        print("=" * 60)

    # simulate
    def run_simulate(self, args, config: RunConfig) -> List[Path]:
        self._banner(f"SIMULATE: {args.model.upper()} PA")
        params = _params(args, need_lambda=args.model == 'poisson')
        runs = ReplicationPipeline(
            name='SIM', params=params, model=args.model, steps=args.steps, reps=args.reps,
            seed=args.seed, threads=self.threads, joint_grid=(args.m_max, args.l_max),
        ).process()

        written = []
        for r in runs:
            frame = pd.DataFrame({'node_id': np.arange(1, r.node_count + 1),
                                  'in': r.in_degrees, 'out': r.out_degrees})
            written.append(self._write('csv', f"degrees_rep{r.index:03d}.csv",
                                       config.derive(rep=r.index, rep_seed=int(r.seed)), frame))

        joint = runs[0].joint.to_frame().rename(columns={'probability': 'frequency'})
        joint['frequency'] = np.mean([r.joint.values.ravel() for r in runs], axis=0)
        joint['overflow'] = float(np.mean([r.joint.overflow for r in runs]))
        written.append(self._write('csv', "joint_counts.csv", config, joint))
        nodes = [r.node_count for r in runs]
        print(f"\n[SIM] Complete: {len(runs)} replication(s), median {int(np.median(nodes))} nodes")
        return written

    # theory
    def run_theory(self, args, config: RunConfig) -> pd.DataFrame:
        params = _params(args)
        if args.joint is not None:
            m, l = args.joint
            frame = pd.DataFrame({'m': [m], 'l': [l], 'probability': [joint_limit_pmf(params, m, l)]})
            name = 'theory_joint.csv'
        elif args.joint_grid is not None:
            frame = joint_limit_grid(params, *args.joint_grid).to_frame()
            name = 'theory_joint_grid.csv'
        elif args.marginal_in is not None:
            ms = np.arange(args.marginal_in + 1)
            frame = pd.DataFrame({'m': ms,
                                  'probability': [marginal_in_pmf(params, int(m)) for m in ms],
                                  'closed_form': marginal_in_closed_form(params, ms)})
            name = 'theory_marginal_in.csv'
        elif args.marginal_out is not None:
            ls = np.arange(1, args.marginal_out + 1)
            frame = pd.DataFrame({'l': ls,
                                  'probability': [marginal_out_pmf(params, int(l)) for l in ls],
                                  'closed_form': marginal_out_closed_form(params, ls)})
            name = 'theory_marginal_out.csv'
        elif args.angular is not None:
            grid = angular_density(params, default_theta_grid(args.angular))
            frame = pd.DataFrame({'theta': grid.theta, 'density': grid.density})
            name = 'theory_angular.csv'
        else:
            tails = tail_exponents(params)
            c_in, c_out = tail_constants(params)
            frame = pd.DataFrame({'iota_in': [tails.iota_in], 'iota_out': [tails.iota_out],
                                  'a': [tails.a], 'c_in': [c_in], 'c_out': [c_out]})
            name = 'theory_tails.csv'

        sys.stdout.write(self.writers['csv'].render(config, frame))
        if self.out_dir:
            self.writers['csv'].write(self._target(name), config, frame)
        return frame

    # fit
    def run_fit(self, args, config: RunConfig) -> List[Path]:
        settings = _fit_settings(args)
        self._banner(f"FIT: {settings['label'].upper()}")
        result = DatasetPipeline(settings['label'], settings).process(args.edges)
        return [
            self._write('json', "estimates.json", config, result.report()),
            self._write('csv', "rates.csv", config, result.rates.daily),
            self._write('csv', "rates_weekly.csv", config, result.rates.weekly),
            self._write('csv', "angular_samples.csv", config, result.samples_frame()),
            self._write('csv', "kde.csv", config, result.kde_frame()),
            self._write('csv', "degrees.csv", config, result.degrees_frame()),
        ]

    # compare
    def run_compare(self, args, config: RunConfig) -> List[Path]:
        self._banner("COMPARE: FITTED MODEL VS LIMIT THEORY")
        with open(args.fit, 'r', encoding='utf-8') as f:
            try:
                doc = json.load(f)
            except (json.JSONDecodeError, UnicodeDecodeError) as e:
                raise ConfigError(f"{args.fit} is not a JSON fit report: {e}") from e
        estimates = ComparePipeline.load_estimates(doc)
        observed = read_table(args.observed) if args.observed else None
        result = ComparePipeline('COMPARE', estimates, args.reps, args.seed,
                                 quantile=args.quantile, threads=self.threads).process(observed)
        for note in result.notes:
            debug_logger.warn('pipeline', "%s", note)
        return [
            self._write('csv', "ccdf_in.csv", config, result.ccdf_in),
            self._write('csv', "ccdf_out.csv", config, result.ccdf_out),
            self._write('csv', "angular_overlay.csv", config, result.angular_overlay),
        ]

    # verify
    def run_verify(self, args, config: RunConfig) -> Path:
        self._banner(f"VERIFY: {args.oracle.upper()}")
        params = _params(args, need_lambda=args.oracle in ('growth', 'discrepancy'))
        report = VerifyPipeline(params, args.seed).process(
            args.oracle, args.steps, args.reps, nodes=args.nodes, bootstrap=args.bootstrap)
        return self._write('json', f"verify_{args.oracle}.json", config, report)

    def run(self, args) -> int:
        config = build_config(args)
        handler = {
            'simulate': self.run_simulate,
            'theory': self.run_theory,
            'fit': self.run_fit,
            'compare': self.run_compare,
            'verify': self.run_verify,
        }[args.command]
        handler(args, config)
        return 0


def _params(args, need_lambda: bool = False) -> ModelParams:
    lam = getattr(args, 'lam', None)
    if need_lambda and lam is None:
        raise InvalidParameterError("--lambda is required for this model")
    return ModelParams(p=args.p, delta_in=args.delta_in, delta_out=args.delta_out, lam=lam)


def _fit_settings(args) -> Dict:
    """Profile defaults overridden by explicit flags."""
    settings = get_profile(args.profile) if args.profile else {}
    overrides = {
        'window': tuple(args.window) if args.window else None,
        'exclude_hours': args.exclude_hours,
        'tz_offset': args.tz_offset,
        'rate_method': args.rate_method,
        'admin_filter': args.admin_filter,
        'quantile': args.quantile,
        'iota_in': args.iota_in,
        'iota_out': args.iota_out,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})
    settings['label'] = args.profile or Path(args.edges).stem
    return settings


def build_config(args) -> RunConfig:
    settings = {k: v for k, v in sorted(vars(args).items())
                if k not in NON_PROVENANCE and k != 'command' and v is not None}
    for key, value in settings.items():
        if isinstance(value, tuple):
            settings[key] = list(value)
    return RunConfig(args.command, settings).validate()


def _add_model_args(parser, with_lambda: bool = True):
    parser.add_argument('--p', type=float, required=True, help='New-node probability p')
    parser.add_argument('--delta-in', type=float, required=True, help='In-degree offset')
    parser.add_argument('--delta-out', type=float, required=True, help='Out-degree offset')
    if with_lambda:
        parser.add_argument('--lambda', dest='lam', type=float, help='Poisson batch rate')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pa_net',
        description='Directed preferential attachment: simulation, limit theory and data fitting',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s simulate --model poisson --p 0.2 --delta-in 1 --delta-out 1 --lambda 10 --steps 2000 --seed 7
  %(prog)s theory --p 0.2 --delta-in 1 --delta-out 1 --joint 0 1
  %(prog)s fit --edges out.facebook-wosn-wall --profile facebook
  %(prog)s compare --fit pa_net_output/estimates.json --reps 20 --seed 1 --observed pa_net_output/degrees.csv
  %(prog)s verify growth --p 0.2 --delta-in 1 --delta-out 1 --lambda 10
  %(prog)s --test                              # Run the test suite
        """
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable debug output for every component')
    parser.add_argument('--test', action='store_true', help='Run the test suite instead of a command')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', '-o', type=Path, help=f'Output directory (default: {RUNTIME.output_dir})')
    common.add_argument('--threads', type=int, help='Worker processes (default: PA_NET_THREADS)')

    sub = parser.add_subparsers(dest='command')

    sim = sub.add_parser('simulate', parents=[common], help='Simulate degree sequences')
    sim.add_argument('--model', choices=['traditional', 'poisson'], required=True)
    _add_model_args(sim)
    sim.add_argument('--steps', type=int, required=True, help='Steps (edges for the traditional model)')
    sim.add_argument('--seed', type=int, required=True)
    sim.add_argument('--reps', type=int, default=1, help='Replications (default: 1)')
    sim.add_argument('--m-max', type=int, default=10, help='In-degree range of the joint grid')
    sim.add_argument('--l-max', type=int, default=10, help='Out-degree range of the joint grid')

    theory = sub.add_parser('theory', parents=[common], help='Limit degree laws')
    _add_model_args(theory, with_lambda=False)
    what = theory.add_mutually_exclusive_group()
    what.add_argument('--joint', nargs=2, type=int, metavar=('M', 'L'), help='Joint limit p[M, L]')
    what.add_argument('--joint-grid', nargs=2, type=int, metavar=('M_MAX', 'L_MAX'), help='Joint grid')
    what.add_argument('--marginal-in', type=int, metavar='M', help='In-degree marginal over 0..M')
    what.add_argument('--marginal-out', type=int, metavar='L', help='Out-degree marginal over 1..L')
    what.add_argument('--angular', type=int, metavar='GRID', help='Angular density on GRID points')
    what.add_argument('--tails', action='store_true', help='Tail exponents and constants (default)')

    fit = sub.add_parser('fit', parents=[common], help='Estimate parameters from an edge list')
    fit.add_argument('--edges', required=True, help='Temporal edge list (KONECT layout)')
    fit.add_argument('--profile', choices=sorted(DATASET_PROFILES), help='Dataset preset')
    fit.add_argument('--window', nargs=2, metavar=('START', 'END'), help='Local dates YYYY-MM-DD, inclusive')
    fit.add_argument('--exclude-hours', metavar='H1-H2', help='Excluded local hours [H1, H2)')
    fit.add_argument('--tz-offset', type=int, metavar='SECONDS', help='Local offset from UTC')
    fit.add_argument('--admin-filter', type=int, metavar='IN_MIN', help='Drop out=0 nodes with in >= IN_MIN')
    fit.add_argument('--rate-method', choices=['interarrival', 'count'])
    fit.add_argument('--quantile', type=float, help='POT threshold quantile (default: 0.995)')
    fit.add_argument('--iota-in', type=float, help='Fixed in tail index instead of the k-scan')
    fit.add_argument('--iota-out', type=float, help='Fixed out tail index instead of the k-scan')

    cmp_ = sub.add_parser('compare', parents=[common], help='Simulated envelopes vs data and theory')
    cmp_.add_argument('--fit', required=True, help='estimates.json written by fit')
    cmp_.add_argument('--reps', type=int, default=20)
    cmp_.add_argument('--seed', type=int, required=True)
    cmp_.add_argument('--observed', help='degrees.csv written by fit')
    cmp_.add_argument('--quantile', type=float, default=0.995)

    ver = sub.add_parser('verify', parents=[common], help='Oracle checks')
    ver.add_argument('oracle', choices=ORACLES)
    _add_model_args(ver)
    ver.add_argument('--steps', type=int)
    ver.add_argument('--reps', type=int)
    ver.add_argument('--seed', type=int, default=0)
    ver.add_argument('--nodes', nargs='+', type=int, default=[1, 5, 10, 50])
    ver.add_argument('--bootstrap', type=int, default=1000)
    return parser


def parse_args(argv=None):
    """Parse command line arguments."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.test and not args.command:
        parser.error("a command is required")
    if args.command == 'verify':
        defaults = ORACLE_DEFAULTS[args.oracle]
        args.steps = defaults['steps'] if args.steps is None else args.steps
        args.reps = defaults['reps'] if args.reps is None else args.reps
    return args


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    # Enable debug if verbose
    if args.verbose:
        for component in COMPONENTS:
            os.environ[f'PA_{component.upper()}_DEBUG'] = '1'
        debug_logger.refresh()

    # Test mode
    if args.test:
        print("Running test suite...")
        try:
            import pytest
        except ImportError as e:
            print(f"Could not import pytest: {e}", file=sys.stderr)
            return 1
        return int(pytest.main(['-q', str(TESTS_DIR)]))

    try:
        orchestrator = PAOrchestrator(out_dir=getattr(args, 'out', None),
                                      threads=getattr(args, 'threads', None))
        return orchestrator.run(args)

    except KeyboardInterrupt:
        print("\n\nInterrupted by user.", file=sys.stderr)
        return 130
    except (PANetError, OSError) as e:
        print(f"\nError: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1
    except Exception as e:
        print(f"\nUnexpected error: {type(e).__name__}: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1


run = main


if __name__ == "__main__":
    sys.exit(main())
