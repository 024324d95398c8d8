"""euclid build | simple-regular."""
from engine.algebra_builder import cartan_euler, quiver_to_dot
from engine.ar_translate import homogeneous_tube_membership
from engine.deformation import tangent_dimension
from engine.euclidean import euclidean_algebra, euclidean_fixture_name, simple_regular_A, simple_regular_search
from engine.representations import end_structure, is_brick
from models.euclidean import A_TILDE, EuclideanSpec
from routes import EXIT_OK, EXIT_VERIFICATION_FAILED, CommandGroup, argument

euclid_group = CommandGroup('euclid', help='canonical Euclidean quivers')

NAME = argument('name', help='atilde(p,q), dtilde<m> or etilde<6|7|8>')


@euclid_group.command('build', help='the quiver, its Cartan matrix and null root', arguments=[NAME])
def build(args):
    spec = EuclideanSpec.from_name(args.name)
    alg = euclidean_algebra(spec)
    payload = {'quiver': spec.to_dict(), 'algebra': alg.to_dict()}
    payload.update(cartan_euler(alg))
    if args.dot:
        payload['dot'] = quiver_to_dot(alg.quiver, name=euclidean_fixture_name(spec))
    return payload, EXIT_OK


@euclid_group.command('simple-regular', help='a module at the mouth of a homogeneous tube',
                      arguments=[NAME])
def simple_regular(args):
    spec = EuclideanSpec.from_name(args.name)
    alg = euclidean_algebra(spec)
    if spec.family == A_TILDE:
        module = simple_regular_A(alg, spec, args.lam if args.lam is not None else '1')
        certificates = {
            'brick': is_brick(module),
            'end': end_structure(module),
            'tau_periodic': homogeneous_tube_membership(module, seed=args.seed),
            'ext1_dim': tangent_dimension(module),
        }
        payload = {'quiver': spec.to_dict(), 'dims': module.dim_vector, 'module': module.to_dict(),
                   'certificates': certificates}
    else:
        found = simple_regular_search(alg, spec, seed=args.seed)
        certificates = found['certificates']
        payload = {'quiver': spec.to_dict(), 'dims': found['module'].dim_vector,
                   'null_root': found['null_root'], 'module': found['module'].to_dict(),
                   'attempt': found['attempt'], 'certificates': certificates,
                   'statistics': found['statistics'],
                   'scope': 'one mouth module of dimension δ; the family indexed by λ is not enumerated'}
    ok = (certificates['brick'] and certificates['tau_periodic']['verdict'] == 'yes'
          and certificates['ext1_dim'] == 1)
    return payload, EXIT_OK if ok else EXIT_VERIFICATION_FAILED
