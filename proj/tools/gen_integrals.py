#!/usr/bin/env python3
# Copyright 2026 The hevqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes STO-3G FCIDUMP files for H2, LiH and BeH2 using PySCF.

Only sigma orbitals are kept for LiH and BeH2 (the molecular axis is x, so
orbitals with p_y / p_z character are dropped). Integrals are expressed in
the restricted Hartree-Fock orbital basis of the kept subspace.

Usage: gen_integrals.py OUT_DIR [--sweep]
"""
import argparse
import os

import numpy as np
from pyscf import ao2mo, gto, scf
from pyscf.tools import fcidump


def sigma_orbitals(mol, mo_coeff):
  labels = mol.ao_labels()
  pi_rows = [i for i, l in enumerate(labels) if "py" in l or "pz" in l]
  keep = []
  for k in range(mo_coeff.shape[1]):
    weight = np.sum(mo_coeff[pi_rows, k] ** 2) if pi_rows else 0.0
    if weight < 1e-6:
      keep.append(k)
  return keep


def write(mol, path):
  mf = scf.RHF(mol)
  mf.conv_tol = 1e-12
  mf.kernel()
  keep = sigma_orbitals(mol, mf.mo_coeff)
  c = mf.mo_coeff[:, keep]
  h1 = c.T @ mf.get_hcore() @ c
  eri = ao2mo.restore(8, ao2mo.kernel(mol, c), len(keep))
  fcidump.from_integrals(path, h1, eri, len(keep), mol.nelectron,
                         mol.energy_nuc(), tol=1e-12)


def molecule(name, dist):
  if name == "h2":
    atoms = f"H 0 0 0; H {dist} 0 0"
  elif name == "lih":
    atoms = f"Li 0 0 0; H {dist} 0 0"
  else:
    atoms = f"Be 0 0 0; H {dist} 0 0; H {-dist} 0 0"
  return gto.M(atom=atoms, basis="sto-3g", unit="Angstrom", verbose=0)


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument("out")
  parser.add_argument("--sweep", action="store_true")
  args = parser.parse_args()
  os.makedirs(args.out, exist_ok=True)
  bond = {"h2": 0.735, "lih": 1.6, "beh2": 1.3}
  for name, dist in bond.items():
    write(molecule(name, dist), os.path.join(args.out, f"{name}_sto3g_{dist:.3f}.fcidump"))
  if args.sweep:
    sweep_dir = os.path.join(args.out, "h2_sweep")
    os.makedirs(sweep_dir, exist_ok=True)
    for dist in np.round(np.arange(0.4, 2.55, 0.15), 3):
      write(molecule("h2", dist), os.path.join(sweep_dir, f"h2_sto3g_{dist:.3f}.fcidump"))

if __name__ == "__main__":
  main()
