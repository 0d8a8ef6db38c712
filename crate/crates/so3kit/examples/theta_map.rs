//! The quaternion-to-rotation map: golden images, the kernel, and the
//! homomorphism property, all in exact arithmetic.
//!
//! ```bash
//! cargo run -p so3kit --example theta_map
//! ```

use so3kit::quaternion::Quaternion;
use so3kit::rotation::theta;
use so3kit::scalar::QuadScalar;

fn main() {
    // Unit quaternions are not required: theta divides by the norm.
    for (label, q) in [
        ("1", Quaternion::one(0)),
        ("i", Quaternion::i(0)),
        ("j", Quaternion::j(0)),
        ("1+i", Quaternion::from_ints(1, 1, 0, 0, 0)),
        ("1+2i", Quaternion::from_ints(1, 2, 0, 0, 0)),
        ("1+2j", Quaternion::from_ints(1, 0, 2, 0, 0)),
        ("1+4i", Quaternion::from_ints(1, 4, 0, 0, 0)),
    ] {
        println!("theta({label}) = {}", theta(&q).unwrap());
    }

    // The kernel is the nonzero reals: scaling does not change the image.
    let x = Quaternion::from_ints(1, 2, 0, 0, 0);
    let scaled = x.scale(&QuadScalar::from_ratio(-7, 3, 0));
    assert_eq!(theta(&x).unwrap(), theta(&scaled).unwrap());
    println!("theta(-7/3 · (1+2i)) = theta(1+2i)  ✓ kernel");

    // And it is a homomorphism.
    let y = Quaternion::from_ints(0, 1, 1, 1, 0);
    let lhs = theta(&(&x * &y)).unwrap();
    let rhs = &theta(&x).unwrap() * &theta(&y).unwrap();
    assert_eq!(lhs, rhs);
    println!("theta(x·y) = theta(x)·theta(y)      ✓ homomorphism");

    // The rotation axis of theta(x) is the vector part of x.
    let m = theta(&y).unwrap();
    println!("axis of theta(i+j+k) = {}", m.axis().unwrap());
}
