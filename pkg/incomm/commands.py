# Copyright © 2019-2020 The incomm developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice (including the next
# paragraph) shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Command handlers

Each handler reads its checked options, fills the `inputs` and `outputs` of the report, and lets
DomainError go up to the entry point.
"""

import logging
from typing import Any, Callable, Dict, List, Optional

from incomm.core import catalog
from incomm.core.invariants import (
    IncommensurabilityVerdict, Witness, certify_incommensurate, compute_invariants,
    hidden_from_single_party, hidden_param_lower_bound, i5_pairwise
)
from incomm.core.schmidt import (
    SchmidtDecomposition, entanglement_entropy, majorizes, nielsen_transformable,
    party_cut_obstructions, schmidt
)
from incomm.core.secret_sharing import (
    SecretQutrit, DecodeResult, joint_measurement, make_secret, prevention_check, qss_decode,
    qss_encode, residual_state, run_cheat_demo
)
from incomm.core.state import (
    DensityMatrix, PureState, ket_terms, local_spectra, reduce
)
from incomm.options import OptionsStruct
from incomm.parser import parse
from incomm.writer import WriteDump, WriteStateFile

Report = Dict[str, Any]
Handler = Callable[[OptionsStruct, Report], None]


# Utilities
###########

def load(args: OptionsStruct, source: str) -> PureState:
    state: PureState = parse(source)
    if args.verbose:
        WriteDump(state, source)
    return state


def load_sources(args: OptionsStruct, report: Report) -> List[PureState]:
    if len(args.sources) == 1:
        report['inputs']['file'] = args.sources[0]
    else:
        report['inputs']['files'] = list(args.sources)
    return [load(args, s) for s in args.sources]


def state_outputs(args: OptionsStruct, state: PureState, report: Report, comment: str) -> None:
    if args.verbose:
        WriteDump(state, comment)
    report['outputs']['dims'] = list(state.party_dims)
    report['outputs']['amps'] = state.amplitudes
    report['outputs']['kets'] = [[label, a] for label, a in ket_terms(state)]
    report['outputs']['output'] = args.output_file
    if args.output_file is not None:
        WriteStateFile(state, args.output_file, comment)
        logging.debug('state written to %s', args.output_file)


def secret_from(amps: Optional[List[complex]]) -> Optional[SecretQutrit]:
    if amps is None:
        return None
    return make_secret(amps[0], amps[1], amps[2], normalize=True)


def secret_payload(secret: SecretQutrit) -> List[complex]:
    return [secret.a, secret.b, secret.c]


def witness_payload(witness: Optional[Witness]) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    return {'quantity': witness.quantity, 'first': witness.first, 'second': witness.second}


def verdict_payload(verdict: IncommensurabilityVerdict) -> Dict[str, Any]:
    return {
        'verdict': verdict.kind.value,
        'witness': witness_payload(verdict.witness),
        'witnesses': [witness_payload(w) for w in verdict.witnesses],
        'party': verdict.party,
    }


# States
########

def run_build(args: OptionsStruct, report: Report) -> None:
    report['inputs']['name'] = args.name
    report['inputs']['params'] = list(args.build_params)
    state: PureState = catalog.build(args.name, args.build_params)
    comment: str = args.name
    if len(args.build_params) != 0:
        comment += ' ' + ' '.join(args.params)
    state_outputs(args, state, report, comment)


def run_catalog(args: OptionsStruct, report: Report) -> None:
    report['outputs']['names'] = catalog.names()


def run_reduce(args: OptionsStruct, report: Report) -> None:
    state: PureState = load_sources(args, report)[0]
    report['inputs']['keep'] = args.indices
    rho: DensityMatrix = reduce(state, args.indices)
    report['outputs']['dim'] = rho.dim
    report['outputs']['matrix'] = rho.matrix
    report['outputs']['spectrum'] = rho.spectrum()
    report['outputs']['purity'] = rho.purity()


def run_spectra(args: OptionsStruct, report: Report) -> None:
    state: PureState = load_sources(args, report)[0]
    spectra = local_spectra(state)
    report['outputs']['spectra'] = spectra
    report['outputs']['purities'] = [float(sum(s ** 2)) for s in spectra]


# Bipartite cuts
################

def run_schmidt(args: OptionsStruct, report: Report) -> None:
    state: PureState = load_sources(args, report)[0]
    report['inputs']['left'] = args.indices
    split: SchmidtDecomposition = schmidt(state, args.indices)
    report['outputs']['left'] = list(split.cut[0])
    report['outputs']['right'] = list(split.cut[1])
    report['outputs']['coefficients'] = split.coefficients
    report['outputs']['rank'] = split.rank()
    report['outputs']['entropy'] = entanglement_entropy(state, args.indices)


def run_majorize(args: OptionsStruct, report: Report) -> None:
    first, second = load_sources(args, report)
    report['inputs']['left'] = args.indices
    assert args.tol is not None
    p = reduce(first, args.indices).spectrum()
    q = reduce(second, args.indices).spectrum()
    forward: bool = majorizes(p, q, args.tol)
    backward: bool = majorizes(q, p, args.tol)
    report['outputs']['spectrum1'] = p
    report['outputs']['spectrum2'] = q
    report['outputs']['first_majorized_by_second'] = forward
    report['outputs']['second_majorized_by_first'] = backward
    report['outputs']['incommensurate'] = not forward and not backward


def run_nielsen(args: OptionsStruct, report: Report) -> None:
    first, second = load_sources(args, report)
    report['inputs']['left'] = args.indices
    forward: bool = nielsen_transformable(first, second, args.indices)
    backward: bool = nielsen_transformable(second, first, args.indices)
    report['outputs']['forward'] = forward
    report['outputs']['backward'] = backward
    report['outputs']['incommensurate'] = not forward and not backward
    report['outputs']['party_obstructions_forward'] = party_cut_obstructions(first, second)
    report['outputs']['party_obstructions_backward'] = party_cut_obstructions(second, first)


# Invariants
############

def run_invariants(args: OptionsStruct, report: Report) -> None:
    state: PureState = load_sources(args, report)[0]
    report['outputs'].update(compute_invariants(state).as_dict())
    report['outputs']['i5_pairwise'] = i5_pairwise(state)


def run_certify(args: OptionsStruct, report: Report) -> None:
    first, second = load_sources(args, report)
    assert args.tol is not None
    report['outputs'].update(verdict_payload(certify_incommensurate(first, second, args.tol)))


def run_hidden_count(args: OptionsStruct, report: Report) -> None:
    report['inputs']['k'] = args.k
    report['outputs']['bound'] = hidden_param_lower_bound(args.k)
    report['outputs']['hidden_from_single_party'] = hidden_from_single_party(args.k)


def run_measure(args: OptionsStruct, report: Report) -> None:
    state: PureState = load_sources(args, report)[0]
    report['inputs']['candidates'] = list(args.candidates)
    candidates: List[PureState] = [load(args, c) for c in args.candidates]
    report['outputs']['probabilities'] = joint_measurement(state, candidates)


# Secret sharing
################

def run_qss_encode(args: OptionsStruct, report: Report) -> None:
    secret: Optional[SecretQutrit] = secret_from(args.secret_amps)
    assert secret is not None
    report['inputs']['secret'] = secret_payload(secret)
    state_outputs(args, qss_encode(secret), report, 'threshold encoding of ' + str(args.secret))


def run_qss_decode(args: OptionsStruct, report: Report) -> None:
    state: PureState = load_sources(args, report)[0]
    secret: Optional[SecretQutrit] = secret_from(args.secret_amps)
    report['inputs']['pair'] = args.pair
    report['inputs']['secret'] = secret_payload(secret) if secret is not None else None
    result: DecodeResult = qss_decode(state, args.pair, secret)
    report['outputs']['secret_register'] = result.secret_register
    report['outputs']['secret_party'] = 'ABC'[result.secret_register]
    report['outputs']['reconstructed'] = secret_payload(result.reconstructed)
    report['outputs']['fidelity'] = result.fidelity
    report['outputs']['separability'] = result.separability
    report['outputs']['residual'] = [[label, a] for label, a
                                     in ket_terms(residual_state(result), 1e-9)]


def run_qss_cheat_demo(args: OptionsStruct, report: Report) -> None:
    report['outputs']['table'] = [
        {'b': r.b, 'pair': r.pair, 'recovered': r.recovered, 'bob_inference': r.bob_inference}
        for r in run_cheat_demo()
    ]


def run_qss_prevention_check(args: OptionsStruct, report: Report) -> None:
    verdicts: List[Dict[str, Any]] = []
    for first, second, verdict in prevention_check():
        payload: Dict[str, Any] = {'first': first, 'second': second}
        payload.update(verdict_payload(verdict))
        verdicts.append(payload)
    report['outputs']['verdicts'] = verdicts


HANDLERS: Dict[str, Handler] = {
    'build': run_build,
    'catalog': run_catalog,
    'reduce': run_reduce,
    'spectra': run_spectra,
    'schmidt': run_schmidt,
    'majorize': run_majorize,
    'nielsen': run_nielsen,
    'invariants': run_invariants,
    'certify': run_certify,
    'hidden-count': run_hidden_count,
    'measure': run_measure,
    'qss encode': run_qss_encode,
    'qss decode': run_qss_decode,
    'qss cheat-demo': run_qss_cheat_demo,
    'qss prevention-check': run_qss_prevention_check,
}
