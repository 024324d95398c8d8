"""homology cover | syzygy | ext | stable-end."""
from engine.finite_algebra import division_evidence
from engine.homological import ext_group, projective_cover, stable_end_table, stable_hom_dim, syzygy
from routes import EXIT_OK, CommandGroup, context_algebra, context_module, context_second_module

homology_group = CommandGroup('homology', help='projective covers, syzygies and Ext')


@homology_group.command('cover', help='minimal projective cover and first syzygy')
def cover(args):
    alg = context_algebra(args)
    return projective_cover(context_module(args, alg)).to_dict(), EXIT_OK


@homology_group.command('syzygy', help='the n-th syzygy (--n)')
def syzygy_(args):
    alg = context_algebra(args)
    omega = syzygy(context_module(args, alg), args.n)
    return {'n': args.n, 'dims': omega.dim_vector, 'module': omega.to_dict()}, EXIT_OK


@homology_group.command('ext', help='Ext^n(module, module2) with class representatives')
def ext(args):
    alg = context_algebra(args)
    a = context_module(args, alg)
    b = context_second_module(args, alg, a)
    result = ext_group(a, b, args.n)
    result['classes'] = [eta.to_dict() for eta in result['classes']]
    return result, EXIT_OK


@homology_group.command('stable-end', help='stable endomorphism ring of the module')
def stable_end(args):
    alg = context_algebra(args)
    v = context_module(args, alg)
    payload = stable_hom_dim(v, v)
    payload['division'] = division_evidence(stable_end_table(v), seed=args.seed)
    return payload, EXIT_OK
