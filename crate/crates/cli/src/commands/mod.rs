pub mod avl;
pub mod fibtree;
pub mod heap;
pub mod oracle;
pub mod verify;
