//! Typed errors multiplexed over one erased error channel.
//!
//! Many independent error types can share a single [`EIO`] error index by
//! erasing each into a [`DynError`]: a registered [`TypeTag`] identifying
//! the originating type, the opaque payload, and a rendering captured at
//! wrap time. [`from_dyn`] recovers the payload exactly when the querying
//! tag is the creating tag, so a handler for one error type can let every
//! other type fly past untouched.
//!
//! [`catch_typed`] is the whole protocol in one move: on failure it
//! attempts the typed cast, runs the handler on a hit, and rethrows the
//! original [`DynError`] unchanged on a miss. An outer handler registered
//! for the right tag then sees the error exactly as thrown. The
//! cast-or-rethrow handler is exposed on its own as [`handle_or_again`],
//! and a test pins `catch_typed` to the `catch_eio` + [`handle_or_again`]
//! composition so the two can never drift apart.
//!
//! Tag identity comes from registration, not from names: two tags
//! registered under the same name never match. Names exist only to make
//! failure reports readable.

use std::any::Any;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::eio::{catch_eio, throw_eio, EIO};

static NEXT_TAG_ID: AtomicU64 = AtomicU64::new(1);

/// Identity token for one registered error type.
///
/// Equality, ordering into maps, and [`from_dyn`] dispatch all use the
/// registration id alone; the name is carried for rendering only.
#[derive(Debug, Clone)]
pub struct TypeTag {
    id: u64,
    name: Arc<str>,
}

impl TypeTag {
    /// Registers a fresh tag. Every call mints a distinct identity, even
    /// for a name that was registered before.
    pub fn register(name: &str) -> TypeTag {
        TypeTag {
            id: NEXT_TAG_ID.fetch_add(1, Ordering::Relaxed),
            name: Arc::from(name),
        }
    }

    /// The display name given at registration.
    pub fn name(&self) -> &str {
        &self.name
    }
}

impl PartialEq for TypeTag {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for TypeTag {}

impl Hash for TypeTag {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

/// One erased error: the creating tag, the opaque payload, and a
/// rendering captured when the error was wrapped.
///
/// Payloads are opaque, so structural equality is the tag identity plus
/// the rendered text; [`DynError::shares_payload`] additionally checks
/// physical payload identity when a test needs exact preservation.
#[derive(Clone)]
pub struct DynError {
    tag: TypeTag,
    payload: Arc<dyn Any + Send + Sync>,
    rendered: String,
}

impl DynError {
    /// The tag this error was created with.
    pub fn tag(&self) -> &TypeTag {
        &self.tag
    }

    /// The rendering captured at wrap time.
    pub fn rendered(&self) -> &str {
        &self.rendered
    }

    /// Whether both errors hold the very same payload allocation.
    pub fn shares_payload(&self, other: &DynError) -> bool {
        Arc::ptr_eq(&self.payload, &other.payload)
    }
}

impl fmt::Debug for DynError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DynError")
            .field("tag", &self.tag)
            .field("rendered", &self.rendered)
            .finish()
    }
}

impl PartialEq for DynError {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.rendered == other.rendered
    }
}

impl Eq for DynError {}

/// Erases a typed payload into the shared channel.
pub fn to_dyn<P>(tag: &TypeTag, payload: P, rendered: impl Into<String>) -> DynError
where
    P: Any + Send + Sync,
{
    DynError {
        tag: tag.clone(),
        payload: Arc::new(payload),
        rendered: rendered.into(),
    }
}

/// Recovers the payload iff `tag` is the creating tag; any other tag
/// misses, identical names notwithstanding.
pub fn from_dyn<P>(tag: &TypeTag, d: &DynError) -> Option<P>
where
    P: Any + Clone,
{
    if d.tag == *tag {
        d.payload.downcast_ref::<P>().cloned()
    } else {
        None
    }
}

/// Throws a typed error through the erased channel:
/// `throw_eio(to_dyn(tag, payload, rendered))`.
pub fn throw_typed<P, A>(tag: &TypeTag, payload: P, rendered: impl Into<String>) -> EIO<DynError, A>
where
    P: Any + Send + Sync,
{
    throw_eio(to_dyn(tag, payload, rendered))
}

/// The cast-or-rethrow handler: runs `h` on the recovered payload when
/// the tags match, otherwise rethrows the original [`DynError`]
/// unchanged.
pub fn handle_or_again<P, A>(
    tag: &TypeTag,
    h: impl Fn(P) -> EIO<DynError, A> + Send + Sync + 'static,
) -> impl Fn(DynError) -> EIO<DynError, A> + Send + Sync + 'static
where
    P: Any + Clone,
    A: 'static,
{
    let tag = tag.clone();
    move |d: DynError| match from_dyn::<P>(&tag, &d) {
        Some(payload) => h(payload),
        None => throw_eio(d),
    }
}

/// Catches only errors created with `tag`, handing their payload to `h`;
/// every other error propagates unchanged to the next enclosing catch.
pub fn catch_typed<P, A>(
    m: EIO<DynError, A>,
    tag: &TypeTag,
    h: impl Fn(P) -> EIO<DynError, A> + Send + Sync + 'static,
) -> EIO<DynError, A>
where
    P: Any + Clone,
    A: 'static,
{
    catch_eio(m, handle_or_again(tag, h))
}
